"""Exact integer/rational helpers and the floating quantum-walk oracle.

Exact side: 2-adic valuations, gcds of eigenvalue gaps, certified integer
eigensystems with rational projectors.  Floating side: ``U(t) = sum_r
exp(i t theta_r) E_r`` and transfer fidelities, used only to cross-check
verdicts reached exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Sequence, Union

import numpy as np

INF = math.inf

# float64 represents every integer below this exactly
_EXACT_FLOAT = 2**53
ATOL = 1e-9


class DegenerateSpectrumError(ValueError):
    pass


def ord2(x: int) -> int | float:
    """Exponent of 2 in ``x``; ``ord2(0)`` is ``math.inf``."""
    x = int(x)
    if x == 0:
        return INF
    x = abs(x)
    return (x & -x).bit_length() - 1


def odd_part(x: int) -> int:
    """``x / 2**ord2(x)`` keeping the sign; requires ``x != 0``."""
    if x == 0:
        raise ValueError("zero has no odd part")
    return x >> ord2(x) if x > 0 else -((-x) >> ord2(x))


def gcd_of_differences(eigenvalues: Sequence[int]) -> int:
    """gcd of ``theta_0 - theta_k`` over the spectrum, ``theta_0`` the first entry."""
    values = [int(x) for x in eigenvalues]
    if len(set(values)) < 2:
        raise DegenerateSpectrumError("degenerate spectrum: need at least two distinct eigenvalues")
    top = values[0]
    return reduce(math.gcd, (top - x for x in values), 0)


@dataclass(frozen=True, order=True)
class RationalPiTime:
    """A time ``coefficient * pi`` with an exact rational coefficient."""

    coefficient: Fraction

    def __post_init__(self):
        object.__setattr__(self, "coefficient", Fraction(self.coefficient))

    @classmethod
    def pi_over(cls, k: int) -> "RationalPiTime":
        return cls(Fraction(1, k))

    @property
    def value(self) -> float:
        return float(self.coefficient) * math.pi

    def __mul__(self, k) -> "RationalPiTime":
        return RationalPiTime(self.coefficient * Fraction(k))

    __rmul__ = __mul__

    def __truediv__(self, k) -> "RationalPiTime":
        return RationalPiTime(self.coefficient / Fraction(k))

    def __str__(self) -> str:
        p, q = self.coefficient.numerator, self.coefficient.denominator
        if p == 0:
            return "0"
        head = "π" if p == 1 else ("-π" if p == -1 else f"{p}π")
        return head if q == 1 else f"{head}/{q}"

    def to_dict(self) -> dict:
        return {"num": self.coefficient.numerator, "den": self.coefficient.denominator, "pi": True}

    @classmethod
    def from_dict(cls, d: dict) -> "RationalPiTime":
        if not d.get("pi", False):
            raise ValueError("time must be a rational multiple of pi")
        return cls(Fraction(d["num"], d["den"]))


@dataclass(frozen=True)
class IntegerSpectrum:
    """Distinct integer eigenvalues in strictly decreasing order.

    ``multiplicities`` is ``None`` for spectra known only as eigenvalue
    lists (closed-form families, published spectra).
    """

    eigenvalues: tuple[int, ...]
    multiplicities: tuple[int, ...] | None = None

    def __post_init__(self):
        ev = tuple(int(x) for x in self.eigenvalues)
        object.__setattr__(self, "eigenvalues", ev)
        if any(a <= b for a, b in zip(ev, ev[1:])):
            raise ValueError(f"eigenvalues must be strictly decreasing: {ev}")
        if self.multiplicities is not None:
            m = tuple(int(x) for x in self.multiplicities)
            if len(m) != len(ev) or any(x <= 0 for x in m):
                raise ValueError("multiplicities must be positive, one per eigenvalue")
            object.__setattr__(self, "multiplicities", m)

    @classmethod
    def from_values(cls, values, multiplicities=None) -> "IntegerSpectrum":
        """Sort (and require distinct) values; multiplicities follow the same permutation."""
        values = [int(v) for v in values]
        if len(set(values)) != len(values):
            raise ValueError(f"repeated eigenvalue in {values}")
        order = sorted(range(len(values)), key=lambda i: -values[i])
        mult = None if multiplicities is None else [multiplicities[i] for i in order]
        return cls(tuple(values[i] for i in order), mult)

    @property
    def n(self) -> int | None:
        return None if self.multiplicities is None else sum(self.multiplicities)

    def __len__(self):
        return len(self.eigenvalues)

    def __iter__(self):
        return iter(self.eigenvalues)

    def trace(self) -> int | None:
        if self.multiplicities is None:
            return None
        return sum(m * t for m, t in zip(self.multiplicities, self.eigenvalues))


@dataclass(frozen=True)
class NonIntegerReport:
    """Returned instead of a spectrum when integrality cannot be certified."""

    approximations: tuple[float, ...]
    reason: str = "non-integer eigenvalues"

    def __bool__(self):
        return False


def exact_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Integer matrix product, exact.

    Uses float64 BLAS when every partial sum is provably below 2**53 and
    falls back to Python integers otherwise.
    """
    if a.dtype != object and b.dtype != object:
        bound = int(np.abs(a).sum(axis=1).max(initial=0)) * int(np.abs(b).max(initial=0))
        if bound < _EXACT_FLOAT:
            out = a.astype(np.float64) @ b.astype(np.float64)
            return np.rint(out).astype(np.int64)
    return a.astype(object) @ b.astype(object)


def _array_gcd(a: np.ndarray) -> int:
    if a.dtype != object:
        return int(np.gcd.reduce(np.abs(a).ravel(), initial=0))
    return reduce(math.gcd, (int(x) for x in a.ravel()), 0)


@dataclass(frozen=True, eq=False)
class RationalMatrix:
    """``num / den`` with an integer numerator array and a positive integer denominator."""

    num: np.ndarray
    den: int

    def __post_init__(self):
        num, den = self.num, int(self.den)
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = -num, -den
        g = math.gcd(_array_gcd(num), den)
        if g > 1:
            num = num // g
            den //= g
        if num.dtype == object and max((abs(int(x)) for x in num.ravel()), default=0) < 2**62:
            num = num.astype(np.int64)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @property
    def shape(self):
        return self.num.shape

    def to_float(self) -> np.ndarray:
        return self.num.astype(np.float64) / self.den

    def entry(self, i: int, j: int) -> Fraction:
        return Fraction(int(self.num[i, j]), self.den)

    def trace(self) -> Fraction:
        return Fraction(int(np.trace(self.num.astype(object))), self.den)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        return RationalMatrix(exact_matmul(self.num, other.num), self.den * other.den)

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        a = self.num.astype(object) * other.den
        b = other.num.astype(object) * self.den
        return RationalMatrix(a + b, self.den * other.den)

    def scale(self, c) -> "RationalMatrix":
        c = Fraction(c)
        return RationalMatrix(self.num.astype(object) * c.numerator, self.den * c.denominator)

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalMatrix):
            return bool(np.array_equal(self.num.astype(object) * other.den,
                                       other.num.astype(object) * self.den))
        other = np.asarray(other)
        if other.dtype.kind in "iu" or other.dtype == object:
            return bool(np.array_equal(self.num.astype(object), other.astype(object) * self.den))
        return NotImplemented

    __hash__ = None

    @classmethod
    def from_int(cls, a) -> "RationalMatrix":
        return cls(np.asarray(a), 1)


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    """``A = sum_r theta_r E_r``.

    Exact mode: integer spectrum and :class:`RationalMatrix` projectors.
    Floating mode: float eigenvalues with orthonormal eigenvector blocks;
    projectors are formed on demand.
    """

    eigenvalues: tuple
    multiplicities: tuple[int, ...]
    exact: bool
    projectors: tuple[RationalMatrix, ...] | None = None
    blocks: tuple[np.ndarray, ...] | None = None

    @property
    def n(self) -> int:
        return sum(self.multiplicities)

    @property
    def spectrum(self) -> IntegerSpectrum | tuple[float, ...]:
        if self.exact:
            return IntegerSpectrum(self.eigenvalues, self.multiplicities)
        return tuple(self.eigenvalues)

    def float_projectors(self) -> list[np.ndarray]:
        if self.projectors is not None:
            return [e.to_float() for e in self.projectors]
        return [v @ v.T for v in self.blocks]

    def _phases(self, t: float) -> np.ndarray:
        return np.exp(1j * t * np.asarray(self.eigenvalues, dtype=np.float64))

    def column(self, u: int, t: float) -> np.ndarray:
        """``U(t) e_u`` without forming the whole unitary."""
        ph = self._phases(t)
        if self.blocks is not None:
            out = np.zeros(self.n, dtype=complex)
            for p, v in zip(ph, self.blocks):
                out += p * (v @ v[u])
            return out
        return sum(p * (e.num[:, u].astype(np.float64) / e.den) for p, e in zip(ph, self.projectors))


def _check_symmetric_integer(m) -> np.ndarray:
    a = np.asarray(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if a.dtype.kind == "f":
        if not np.all(a == np.rint(a)):
            raise ValueError("matrix must have integer entries")
        a = np.rint(a).astype(np.int64)
    elif a.dtype.kind not in "iub" and a.dtype != object:
        raise ValueError("matrix must have integer entries")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix must be symmetric")
    return a.astype(np.int64) if a.dtype != object else a


def _cluster(values: np.ndarray, tol: float = 1e-6) -> list[float]:
    out: list[float] = []
    for x in sorted(values.tolist(), reverse=True):
        if not out or abs(out[-1] - x) > tol:
            out.append(x)
    return out


def integer_eigensystem(m, *, int_tol: float = 1e-6) -> SpectralDecomposition | NonIntegerReport:
    """Certified integer eigensystem of a symmetric integer matrix.

    Floating eigenvalues are rounded to integer candidates ``theta_0 > ... >
    theta_d``.  They are accepted only if ``prod_s (M - theta_s I) = 0``
    holds exactly, which proves the spectrum lies in the candidate set.
    Projectors follow by Lagrange interpolation,
    ``E_r = prod_{s != r} (M - theta_s I) / (theta_r - theta_s)``, and each
    multiplicity is the exact trace of its projector.
    """
    a = _check_symmetric_integer(m)
    n = a.shape[0]
    w = np.linalg.eigvalsh(a.astype(np.float64))
    approx = tuple(_cluster(w))
    rounded = np.rint(w)
    if np.max(np.abs(w - rounded), initial=0.0) > int_tol:
        return NonIntegerReport(approx)
    thetas = sorted({int(x) for x in rounded}, reverse=True)

    eye = np.eye(n, dtype=np.int64)
    factors = [a - th * eye for th in thetas]
    k = len(factors)
    # prefix[i] = F_0 ... F_{i-1}, suffix[i] = F_i ... F_{k-1}
    prefix = [eye]
    for f in factors[:-1]:
        prefix.append(exact_matmul(prefix[-1], f))
    suffix = [None] * (k + 1)
    suffix[k] = eye
    for i in range(k - 1, 0, -1):
        suffix[i] = exact_matmul(factors[i], suffix[i + 1])

    annihilator = exact_matmul(prefix[k - 1], factors[k - 1])
    if np.any(annihilator != 0):
        return NonIntegerReport(approx, "integer candidates fail the annihilator identity")

    projectors = []
    mults = []
    for r, th in enumerate(thetas):
        num = exact_matmul(prefix[r], suffix[r + 1]) if r + 1 <= k else prefix[r]
        den = math.prod(th - s for s in thetas if s != th)
        e = RationalMatrix(num, den)
        tr = e.trace()
        if tr.denominator != 1 or tr <= 0:
            return NonIntegerReport(approx, "projector trace is not a positive integer")
        projectors.append(e)
        mults.append(int(tr))
    if sum(mults) != n:
        return NonIntegerReport(approx, "certified multiplicities do not sum to n")
    return SpectralDecomposition(tuple(thetas), tuple(mults), True, projectors=tuple(projectors))


def float_eigensystem(m, *, tol: float = 1e-8) -> SpectralDecomposition:
    """Floating decomposition grouped into eigenspaces (for large or non-integer spectra)."""
    a = np.asarray(m, dtype=np.float64)
    if not np.allclose(a, a.T):
        raise ValueError("matrix must be symmetric")
    w, v = np.linalg.eigh(a)
    order = np.argsort(-w, kind="stable")
    w, v = w[order], v[:, order]
    groups: list[list[int]] = []
    for i, x in enumerate(w):
        if groups and abs(w[groups[-1][0]] - x) <= tol:
            groups[-1].append(i)
        else:
            groups.append([i])
    vals = tuple(float(np.mean(w[g])) for g in groups)
    blocks = tuple(v[:, g] for g in groups)
    return SpectralDecomposition(vals, tuple(len(g) for g in groups), False, blocks=blocks)


def _time(t) -> float:
    return t.value if isinstance(t, RationalPiTime) else float(t)


def evolution(decomp: SpectralDecomposition, t) -> np.ndarray:
    """``U(t) = sum_r exp(i theta_r t) E_r`` as a dense complex matrix."""
    tt = _time(t)
    ph = decomp._phases(tt)
    if decomp.blocks is not None:
        v = np.hstack(decomp.blocks)
        p = np.concatenate([np.full(b.shape[1], x) for x, b in zip(ph, decomp.blocks)])
        return (v * p) @ v.T
    return sum(x * e.to_float() for x, e in zip(ph, decomp.projectors))


def fidelity(decomp: SpectralDecomposition, u: int, v: int, t) -> float:
    """``|U(t)_{v,u}|``; equals 1 exactly when transfer u -> v is perfect."""
    return float(abs(decomp.column(u, _time(t))[v]))


Decomposition = Union[SpectralDecomposition, NonIntegerReport]


# -- small dense Fraction linear algebra (sizes are scheme dimensions, d+1 <= ~20)

def _fraction_rows(m) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in np.asarray(m, dtype=object).tolist()]


def rational_rank(m) -> int:
    rows = _fraction_rows(m)
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank][col]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / p
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def rational_det(m) -> Fraction:
    rows = _fraction_rows(m)
    n = len(rows)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        p = rows[col][col]
        det *= p
        for r in range(col + 1, n):
            if rows[r][col] != 0:
                f = rows[r][col] / p
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return det


def rational_inverse(m) -> list[list[Fraction]]:
    rows = _fraction_rows(m)
    n = len(rows)
    aug = [row + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def as_int_if_integral(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else x
