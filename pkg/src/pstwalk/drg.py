"""Distance-regular graph combinatorics from intersection arrays."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
import numpy as np

from .numerics import (
    IntegerSpectrum,
    NonIntegerReport,
    as_int_if_integral,
    rational_det,
)


@dataclass(frozen=True)
class IntersectionArray:
    """``{b_0, ..., b_{d-1}; c_1, ..., c_d}``.

    Internally padded with the conventions ``c_0 = 0`` and ``b_d = 0``.
    """

    b: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        object.__setattr__(self, "c", tuple(int(x) for x in self.c))
        if len(self.b) != len(self.c) or not self.b:
            raise ValueError("intersection array needs d >= 1 entries in both rows")

    @classmethod
    def parse(cls, text: str) -> "IntersectionArray":
        """Parse ``"b0,b1,...;c1,c2,..."`` (braces optional)."""
        body = text.strip().strip("{}")
        if body.count(";") != 1:
            raise ValueError(f"expected 'b0,...;c1,...', got {text!r}")
        left, right = body.split(";")
        try:
            b = [int(x) for x in left.split(",") if x.strip()]
            c = [int(x) for x in right.split(",") if x.strip()]
        except ValueError:
            raise ValueError(f"non-integer entry in {text!r}") from None
        return cls(tuple(b), tuple(c))

    def __str__(self):
        return "{" + ",".join(map(str, self.b)) + ";" + ",".join(map(str, self.c)) + "}"

    @property
    def d(self) -> int:
        return len(self.b)

    @property
    def k(self) -> int:
        return self.b[0]

    def b_at(self, i: int) -> int:
        return self.b[i] if i < self.d else 0

    def c_at(self, i: int) -> int:
        return self.c[i - 1] if i >= 1 else 0

    @property
    def a(self) -> tuple[int, ...]:
        return tuple(self.k - self.b_at(i) - self.c_at(i) for i in range(self.d + 1))

    @property
    def valencies(self) -> tuple[Fraction, ...]:
        ks = [Fraction(1)]
        for i in range(self.d):
            ks.append(ks[-1] * self.b[i] / self.c[i] if self.c[i] else Fraction(0))
        return tuple(ks)

    @property
    def n(self) -> Fraction:
        return sum(self.valencies)

    def tridiagonal(self) -> list[list[int]]:
        """Intersection matrix with rows ``(c_i, a_i, b_i)``."""
        d = self.d
        a = self.a
        m = [[0] * (d + 1) for _ in range(d + 1)]
        for i in range(d + 1):
            m[i][i] = a[i]
            if i > 0:
                m[i][i - 1] = self.c_at(i)
            if i < d:
                m[i][i + 1] = self.b_at(i)
        return m

    def to_dict(self) -> dict:
        return {"b": list(self.b), "c": list(self.c)}


@dataclass
class ArrayReport:
    valid: bool
    failures: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.valid


def validate_array(arr: IntersectionArray) -> ArrayReport:
    """Monotonicity chains, integral valencies and non-negative ``a_i``."""
    fails = []
    b, c = arr.b, arr.c
    if not b[0] > 0:
        fails.append("b_0 must be positive")
    if len(b) > 1 and not b[0] > b[1]:
        fails.append("b_0 > b_1 violated")
    if any(x < y for x, y in zip(b[1:], b[2:])):
        fails.append("b_1 >= b_2 >= ... violated")
    if b[-1] <= 0:
        fails.append("b_{d-1} > 0 violated")
    if c[0] != 1:
        fails.append("c_1 = 1 violated")
    if any(x > y for x, y in zip(c, c[1:])):
        fails.append("c_1 <= c_2 <= ... violated")
    if c[-1] > b[0]:
        fails.append("c_d <= b_0 violated")
    if any(x < 0 for x in arr.a):
        fails.append("negative a_i")
    if not fails:
        for i, ki in enumerate(arr.valencies):
            if ki.denominator != 1 or ki <= 0:
                fails.append(f"valency k_{i} = {ki} is not a positive integer")
                break
    return ArrayReport(not fails, fails)


def is_antipodal_2cover(arr: IntersectionArray) -> bool:
    """True iff each vertex has a unique vertex at distance ``d``."""
    return arr.valencies[-1] == 1


def _cosine_sequence(arr: IntersectionArray, theta) -> list[Fraction]:
    """Normalised ``u_i(theta)`` with ``u_0 = 1``, ``u_1 = theta / k``."""
    theta = Fraction(theta)
    k = arr.k
    a = arr.a
    u = [Fraction(1), theta / k]
    for i in range(1, arr.d):
        ci, bi = arr.c_at(i), arr.b_at(i)
        u.append(((theta - a[i]) * u[i] - ci * u[i - 1]) / bi)
    return u[: arr.d + 1]


def _distance_polys(arr: IntersectionArray, theta) -> list[Fraction]:
    """``v_i(theta)``: eigenvalue of ``A_i`` on the ``theta``-eigenspace."""
    theta = Fraction(theta)
    a = arr.a
    v = [Fraction(1), theta]
    for i in range(1, arr.d):
        v.append(((theta - a[i]) * v[i] - arr.b_at(i - 1) * v[i - 1]) / arr.c_at(i + 1))
    return v[: arr.d + 1]


def spectrum_from_array(arr: IntersectionArray) -> IntegerSpectrum | NonIntegerReport:
    """Eigenvalues of the intersection matrix with standard multiplicities.

    Candidates come from a floating eigensolve; each is accepted only when
    ``det(L - theta I) = 0`` exactly.  Multiplicities are
    ``m = n / sum_i k_i u_i(theta)^2``.
    """
    tri = arr.tridiagonal()
    w = np.linalg.eigvals(np.array(tri, dtype=np.float64))
    approx = tuple(sorted((float(x.real) for x in w), reverse=True))
    if np.max(np.abs(w.imag)) > 1e-9 or np.max(np.abs(w.real - np.rint(w.real))) > 1e-6:
        return NonIntegerReport(approx)
    cands = sorted({int(x) for x in np.rint(w.real)}, reverse=True)
    if len(cands) != arr.d + 1:
        return NonIntegerReport(approx, "rounded eigenvalues collide")
    size = arr.d + 1
    for th in cands:
        shifted = [[tri[i][j] - (th if i == j else 0) for j in range(size)] for i in range(size)]
        if rational_det(shifted) != 0:
            return NonIntegerReport(approx, f"candidate {th} is not an exact eigenvalue")
    ks = arr.valencies
    n = sum(ks)
    mults = []
    for th in cands:
        u = _cosine_sequence(arr, th)
        m = n / sum(k * x * x for k, x in zip(ks, u))
        if m.denominator != 1 or m <= 0:
            return NonIntegerReport(approx, f"non-integral multiplicity {m} for eigenvalue {th}")
        mults.append(int(m))
    return IntegerSpectrum(tuple(cands), tuple(mults))


def eigenmatrices_from_array(arr: IntersectionArray, spectrum: IntegerSpectrum | None = None):
    """``(P, Q)`` of the distance scheme in the natural (decreasing) order.

    ``P[j][i] = v_i(theta_j)`` and ``Q[i][j] = m_j P[j][i] / k_i``; entries
    are ints or Fractions.
    """
    if spectrum is None:
        spectrum = spectrum_from_array(arr)
    if isinstance(spectrum, NonIntegerReport):
        raise ValueError(f"cannot build eigenmatrices: {spectrum.reason}")
    ks = arr.valencies
    P = [[as_int_if_integral(x) for x in _distance_polys(arr, th)] for th in spectrum.eigenvalues]
    Q = [
        [as_int_if_integral(Fraction(spectrum.multiplicities[j]) * P[j][i] / ks[i]) for j in range(arr.d + 1)]
        for i in range(arr.d + 1)
    ]
    return P, Q


def gaussian_coefficient(i: int, b: int) -> int:
    """``[i, 1]_b``: ``i`` when ``b == 1`` else ``(b**i - 1) / (b - 1)``."""
    if b == 0:
        raise ValueError("base must be nonzero")
    if i < 0:
        raise ValueError("i must be non-negative")
    if b == 1:
        return i
    num = b**i - 1
    q, r = divmod(num, b - 1)
    assert r == 0
    return q


@dataclass(frozen=True)
class ClassicalParameters:
    """Classical parameters ``(d, b, alpha, beta)``.

    ``alpha_c``/``beta_c`` are kept apart from the gcd ``alpha`` used by the
    transfer test.
    """

    d: int
    b: int
    alpha_c: int | Fraction
    beta_c: int | Fraction

    def _g(self, i):
        return gaussian_coefficient(i, self.b)

    def array(self) -> IntersectionArray:
        d = self.d
        bs = [(self._g(d) - self._g(i)) * (self.beta_c - self.alpha_c * self._g(i)) for i in range(d)]
        cs = [self._g(i) * (1 + self.alpha_c * self._g(i - 1)) for i in range(1, d + 1)]
        for x in bs + cs:
            if Fraction(x).denominator != 1:
                raise ValueError(f"classical parameters give non-integral array entry {x}")
        return IntersectionArray(tuple(int(x) for x in bs), tuple(int(x) for x in cs))


def classical_eigenvalues(cp: ClassicalParameters) -> IntegerSpectrum:
    """``[d-j]_b (beta - alpha [j]_b) - [j]_b`` for ``j = 0..d``, sorted decreasing."""
    vals = []
    for j in range(cp.d + 1):
        x = Fraction(cp._g(cp.d - j)) * (cp.beta_c - cp.alpha_c * cp._g(j)) - cp._g(j)
        if x.denominator != 1:
            raise ValueError(f"non-integer eigenvalue {x} for j={j}")
        vals.append(int(x))
    if len(set(vals)) != len(vals):
        raise ValueError(f"repeated eigenvalue in {vals}")
    return IntegerSpectrum.from_values(vals)
