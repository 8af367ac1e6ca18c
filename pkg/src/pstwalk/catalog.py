"""Witness families: graph constructors, covers of K_n, sporadic P-matrices, eigenvalue formulas."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .drg import (
    ClassicalParameters,
    IntersectionArray,
    classical_eigenvalues,
    spectrum_from_array,
    validate_array,
)
from .graph import Graph
from .numerics import IntegerSpectrum, NonIntegerReport, RationalPiTime
from .pst import InternalConsistencyError, PstCertificate, drg_pst_test
from .scheme import PSchemeView, scheme_from_eigenmatrix

# ---------------------------------------------------------------- graphs


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("n must be positive")
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError("cycle needs k >= 3")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def hypercube(d: int) -> Graph:
    if d < 1:
        raise ValueError("hypercube needs d >= 1")
    n = 1 << d
    return Graph.from_edges(n, [(x, x ^ (1 << i)) for x in range(n) for i in range(d) if x < x ^ (1 << i)])


def cocktail_party(m: int) -> Graph:
    """Complement of ``m K_2``; vertex ``2i`` and ``2i+1`` form the missing matching."""
    if m < 2:
        raise ValueError("cocktail party needs m >= 2")
    n = 2 * m
    return Graph.from_edges(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if u // 2 != v // 2])


def generalized_petersen(n: int, k: int) -> Graph:
    edges = []
    for i in range(n):
        edges += [(i, (i + 1) % n), (i, n + i), (n + i, n + (i + k) % n)]
    return Graph.from_edges(2 * n, edges)


def petersen() -> Graph:
    return generalized_petersen(5, 2)


def dodecahedron() -> Graph:
    return generalized_petersen(10, 2)


def orthogonal_array_graph(n: int, m: int) -> Graph:
    """``OA(n, m)`` graph on ``Z_n^2`` for ``m <= 3``.

    Points collide in row, column, or (``m = 3``) symbol ``i + j mod n``.
    """
    if not 1 <= m <= 3 or n < 2:
        raise ValueError("explicit OA graphs are built for 1 <= m <= 3 only")
    keys = [lambda p: p[0], lambda p: p[1], lambda p: (p[0] + p[1]) % n][:m]
    pts = [(i, j) for i in range(n) for j in range(n)]
    edges = [(a, b) for a, b in itertools.combinations(pts, 2) if any(f(a) == f(b) for f in keys)]
    return Graph.from_labelled_edges(pts, edges)


def bipartite_double(g: Graph) -> Graph:
    """``X x K2``: ``(x, a) ~ (y, b)`` iff ``x ~ y`` and ``a != b``; vertex ``(x, a)`` is ``2x + a``."""
    edges = []
    for x, y in g.edges:
        edges += [(2 * x, 2 * y + 1), (2 * x + 1, 2 * y)]
    labels = [(x, a) for x in range(g.n) for a in (0, 1)]
    return Graph.from_edges(2 * g.n, edges, labels)


# ---------------------------------------------------------------- Hadamard


def is_hadamard(h) -> bool:
    h = np.asarray(h)
    n = h.shape[0]
    return bool(h.shape == (n, n) and np.isin(h, (1, -1)).all() and np.array_equal(h @ h.T, n * np.eye(n, dtype=h.dtype)))


def sylvester_hadamard(order: int) -> np.ndarray:
    if order < 1 or order & (order - 1):
        raise ValueError("Sylvester construction needs a power of two")
    h = np.array([[1]], dtype=np.int64)
    base = np.array([[1, 1], [1, -1]], dtype=np.int64)
    while h.shape[0] < order:
        h = np.kron(h, base)
    return h


def symmetric_constant_diagonal_hadamard(order: int) -> np.ndarray:
    """Kronecker powers of ``2I - J`` (order 4); exists here for orders ``4**k``."""
    k = round(math.log(order, 4)) if order >= 4 else -1
    if k < 1 or 4**k != order:
        raise ValueError("shipped symmetric constant-diagonal Hadamard matrices have order 4**k")
    w = 2 * np.eye(4, dtype=np.int64) - np.ones((4, 4), dtype=np.int64)
    h = w
    for _ in range(k - 1):
        h = np.kron(h, w)
    return h


def hadamard_graph(h) -> Graph:
    """Vertices ``(kind, index, sign)`` with kind ``'c'``/``'r'``; ``4n`` vertices, ``n``-regular."""
    h = np.asarray(h)
    if not is_hadamard(h) or h.shape[0] < 2:
        raise ValueError("not a Hadamard matrix of order >= 2")
    n = h.shape[0]
    verts = [(kind, i, s) for kind in ("c", "r") for i in range(n) for s in "+-"]
    edges = []
    for r in range(n):
        for c in range(n):
            if h[r, c] == 1:
                edges += [(("c", c, "-"), ("r", r, "-")), (("c", c, "+"), ("r", r, "+"))]
            else:
                edges += [(("c", c, "-"), ("r", r, "+")), (("c", c, "+"), ("r", r, "-"))]
    return Graph.from_labelled_edges(verts, edges)


def hadamard_cover(h) -> Graph:
    """``(n, 2, n/2)`` cover of ``K_n`` from a symmetric Hadamard matrix with constant diagonal.

    The diagonal is normalised to ``+1``; with ``B = H - I`` pair ``i`` and
    ``j`` are matched straight (``i+ j+``, ``i- j-``) when ``B_ij = 1`` and
    crossed otherwise.  Vertex ``(i, s)`` has index ``2i + s``.
    """
    h = np.asarray(h, dtype=np.int64)
    n = h.shape[0]
    if not is_hadamard(h):
        raise ValueError("not a Hadamard matrix")
    if not np.array_equal(h, h.T):
        raise ValueError("Hadamard matrix must be symmetric")
    diag = set(np.diag(h).tolist())
    if len(diag) != 1:
        raise ValueError("Hadamard matrix must have constant diagonal")
    if n < 4 or n % 4:
        raise ValueError("order must be a multiple of 4, at least 4")
    if diag == {-1}:
        h = -h
    edges = []
    for i, j in itertools.combinations(range(n), 2):
        if h[i, j] == 1:
            edges += [(2 * i, 2 * j), (2 * i + 1, 2 * j + 1)]
        else:
            edges += [(2 * i, 2 * j + 1), (2 * i + 1, 2 * j)]
    labels = [(i, s) for i in range(n) for s in (0, 1)]
    return Graph.from_edges(2 * n, edges, labels)


# ---------------------------------------------------------------- covers of K_n


@dataclass(frozen=True)
class CoverParameters:
    n: int
    r: int
    c: int

    @property
    def delta(self) -> int:
        return self.n - self.r * self.c - 2

    @property
    def Delta(self) -> int:
        return self.delta**2 + 4 * (self.n - 1)

    @property
    def sqrt_Delta(self) -> int | None:
        s = math.isqrt(self.Delta)
        return s if s * s == self.Delta else None

    @property
    def rho(self) -> Fraction | float:
        s = self.sqrt_Delta
        return Fraction(self.delta + s, 2) if s is not None else (self.delta + math.sqrt(self.Delta)) / 2

    @property
    def sigma(self) -> Fraction | float:
        s = self.sqrt_Delta
        return Fraction(self.delta - s, 2) if s is not None else (self.delta - math.sqrt(self.Delta)) / 2

    @property
    def t_param(self) -> Fraction | float:
        """``-sigma``, so that ``Delta = (2t + delta)**2``."""
        return -self.sigma

    def array(self) -> IntersectionArray:
        n, r, c = self.n, self.r, self.c
        return IntersectionArray((n - 1, (r - 1) * c, 1), (1, c, n - 1))


def cover_spectrum(p: CoverParameters) -> IntegerSpectrum | NonIntegerReport:
    """``{n-1, (delta + sqrt(Delta))/2, -1, (delta - sqrt(Delta))/2}``.

    Multiplicities are attached when the array passes validation.
    """
    vals = [p.n - 1, p.rho, -1, p.sigma]
    approx = tuple(float(x) for x in vals)
    if p.sqrt_Delta is None or any(Fraction(x).denominator != 1 for x in vals):
        return NonIntegerReport(approx)
    ints = [int(x) for x in vals]
    if len(set(ints)) != 4:
        return NonIntegerReport(approx, "eigenvalues are not distinct")
    mults = None
    if validate_array(p.array()).valid:
        spec = spectrum_from_array(p.array())
        if isinstance(spec, NonIntegerReport):
            return spec
        if spec.eigenvalues != tuple(sorted(ints, reverse=True)):
            raise InternalConsistencyError(f"cover formula disagrees with intersection matrix for {p}")
        return spec
    return IntegerSpectrum.from_values(ints, mults)


def closed_form_cover_verdict(p: CoverParameters) -> tuple[bool | None, RationalPiTime | None]:
    """Case analysis for ``(n, 2, c)`` covers; ``None`` when only the partner is decided."""
    if p.sqrt_Delta is None or Fraction(p.rho).denominator != 1:
        return False, None
    n, delta = p.n, p.delta
    if n % 2:
        return False, None
    if delta == 0:
        return False, None
    if delta == -2:
        s = math.isqrt(n)
        if s * s == n and s % 2 == 0:
            return True, RationalPiTime.pi_over(s)
        return False, None
    if delta == 2:
        return (True, RationalPiTime.pi_over(2)) if n % 8 == 0 else (False, None)
    if delta % 2 or delta % 4 == 0:
        return False, None
    t = int(p.t_param)
    if t % 2 == 0:
        return False, None
    return (True, None) if t % 4 == 3 else (None, None)


def cover_pst(p: CoverParameters) -> PstCertificate:
    """Parity test on an ``(n, 2, c)`` cover, cross-checked against the case analysis."""
    if p.r != 2:
        raise ValueError("perfect state transfer needs fibres of size 2 (r = 2)")
    arr = p.array()
    report = validate_array(arr)
    if not report.valid:
        cert = PstCertificate(False, 1, failure_reason="invalid intersection array: " + "; ".join(report.failures))
    else:
        cert = drg_pst_test(arr)
    closed, tau = closed_form_cover_verdict(p)
    if report.valid and closed is not None:
        if closed != cert.verdict or (tau is not None and cert.verdict and tau != cert.tau):
            raise InternalConsistencyError(f"case analysis disagrees with the parity test for {p}")
    return PstCertificate(
        cert.verdict, cert.relation, cert.T_index, cert.partition, cert.alpha, cert.tau,
        cert.failure_reason, cert.candidates,
        {"n": p.n, "r": p.r, "c": p.c, "delta": p.delta, "Delta": p.Delta, "closed_form": closed},
    )


def partner_cover(p: CoverParameters) -> CoverParameters:
    """Distance-2 graph of a 2-cover: ``(n, 2, n - 2 - c)`` with ``delta -> -delta``."""
    if p.r != 2:
        raise ValueError("partner cover is defined for r = 2")
    return CoverParameters(p.n, 2, p.n - 2 - p.c)


def neighbourhood_srg(p: CoverParameters) -> tuple:
    """``(v, k, lambda, mu)`` of the first subconstituent; entries may be Fractions."""
    n, c = p.n, p.c
    return (n - 1, n - c - 2, n - Fraction(3 * c, 2) - 3, Fraction(n - c - 2, 2))


def srg_krein(v, k, lam, mu) -> bool:
    """Both Krein inequalities for a primitive strongly regular graph."""
    disc = (lam - mu) ** 2 + 4 * (k - mu)
    s_ = math.isqrt(int(disc)) if Fraction(disc).denominator == 1 else None
    root = Fraction(s_) if s_ is not None and s_ * s_ == disc else math.sqrt(disc)
    r = (lam - mu + root) / 2
    s = (lam - mu - root) / 2
    return (r + 1) * (k + r + 2 * r * s) <= (k + r) * (s + 1) ** 2 and (s + 1) * (k + s + 2 * r * s) <= (
        k + s
    ) * (r + 1) ** 2


@dataclass(frozen=True)
class CoverRow:
    n: int
    c: int
    delta: int
    tau: RationalPiTime
    flags: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {"n": self.n, "c": self.c, "delta": self.delta, "time": str(self.tau),
                "tau": self.tau.to_dict(), "flags": list(self.flags)}


# (n, c, delta, time) as printed in the published table for n < 280
TABLE1 = (
    (28, 10, 6, RationalPiTime.pi_over(2)),
    (76, 42, -10, RationalPiTime.pi_over(2)),
    (96, 40, 14, RationalPiTime.pi_over(4)),
    (96, 54, -14, RationalPiTime.pi_over(6)),
    (120, 54, 10, RationalPiTime.pi_over(6)),
    (136, 70, -6, RationalPiTime.pi_over(2)),
    (148, 66, 14, RationalPiTime.pi_over(2)),
    (176, 72, 30, RationalPiTime.pi_over(4)),
    (176, 102, -30, RationalPiTime.pi_over(2)),
    (244, 130, -18, RationalPiTime.pi_over(2)),
    (276, 162, -50, RationalPiTime.pi_over(6)),
)


@dataclass
class CoverAudit:
    table1: list[CoverRow] = field(default_factory=list)
    hadamard: list[CoverRow] = field(default_factory=list)
    filtered: list[tuple[int, int, int, str]] = field(default_factory=list)

    @property
    def extra_candidates(self) -> list[CoverRow]:
        known = {(n, c) for n, c, _, _ in TABLE1}
        return [r for r in self.table1 if (r.n, r.c) not in known]


def _feasibility(p: CoverParameters) -> str | None:
    """Reason a cover parameter set is rejected, or ``None`` if it survives."""
    if p.sqrt_Delta is None:
        return "Delta not a perfect square"
    spec = cover_spectrum(p)
    if isinstance(spec, NonIntegerReport):
        return spec.reason
    report = validate_array(p.array())
    if not report.valid:
        return "invalid intersection array"
    if spec.multiplicities is None:
        return "multiplicities unavailable"
    v, k, lam, mu = neighbourhood_srg(p)
    if k == 0:
        return None
    if any(Fraction(x).denominator != 1 for x in (lam, mu)) or lam < 0:
        return "neighbourhood SRG parameters not non-negative integers"
    if 0 < k < v - 1 and not srg_krein(v, k, lam, mu):
        return "neighbourhood SRG violates a Krein condition"
    return None


def audit_covers(n_max: int) -> CoverAudit:
    """All ``(n, 2, c)``, ``4 <= n < n_max``, split into the table stream and the Hadamard-type stream.

    Filters, in order: ``Delta`` square, integral spectrum and
    multiplicities, valid array, integral neighbourhood SRG satisfying the
    Krein conditions; the table stream additionally drops ``delta`` in
    ``{0, +-2}`` and the degenerate ``c = n - 2`` covers (``K_{n,n}`` minus a
    perfect matching, edgeless neighbourhoods).  Rows are ordered by ``n``
    ascending, ``delta`` descending.
    """
    if n_max < 4:
        raise ValueError("n_max must be at least 4")
    audit = CoverAudit()
    for n in range(4, n_max):
        for c in range(1, n - 1):
            p = CoverParameters(n, 2, c)
            if p.sqrt_Delta is None:
                continue
            reason = _feasibility(p)
            if reason is not None:
                audit.filtered.append((n, c, p.delta, reason))
                continue
            cert = cover_pst(p)
            if not cert.verdict:
                continue
            if p.delta in (-2, 2):
                audit.hadamard.append(CoverRow(n, c, p.delta, cert.tau, ("hadamard-type",)))
            elif p.delta == 0:
                raise InternalConsistencyError("delta = 0 cover reported with PST")
            elif c == n - 2:
                audit.filtered.append((n, c, p.delta, "degenerate cover c = n - 2"))
            else:
                audit.table1.append(CoverRow(n, c, p.delta, cert.tau))
    key = lambda r: (r.n, -r.delta)
    audit.table1.sort(key=key)
    audit.hadamard.sort(key=key)
    known = {(n, c) for n, c, _, _ in TABLE1}
    audit.table1 = [r if (r.n, r.c) in known else CoverRow(r.n, r.c, r.delta, r.tau, ("extra-candidate",))
                    for r in audit.table1]
    return audit


def enumerate_pst_covers(n_max: int, stream: str = "table1") -> list[CoverRow]:
    audit = audit_covers(n_max)
    if stream == "table1":
        return audit.table1
    if stream == "hadamard":
        return audit.hadamard
    if stream == "all":
        return sorted(audit.table1 + audit.hadamard, key=lambda r: (r.n, -r.delta))
    raise ValueError(f"unknown stream {stream!r}")


# ---------------------------------------------------------------- sporadic schemes


@dataclass(frozen=True)
class SporadicScheme:
    name: str
    params: dict
    P: tuple[tuple[int, ...], ...]
    n: int

    def view(self) -> PSchemeView:
        return scheme_from_eigenmatrix(self.P, self.n)


def _exact(x) -> int:
    x = Fraction(x)
    if x.denominator != 1:
        raise ValueError(f"non-integral P entry {x}")
    return int(x)


def _penttila_williford(s: int):
    if s <= 2:
        raise ValueError("penttila_williford needs s > 2")
    a = (s - 1) * (s * s + 1)
    return [
        [1, a, (s * s - 2 * s) * (s * s + 1), a, 1],
        [1, s * s + 1, 0, -s * s - 1, -1],
        [1, s - 1, -2 * s, s - 1, 1],
        [1, -s + 1, 0, s - 1, -1],
        [1, -(s - 1) ** 2, 2 * s * (s - 2), -(s - 1) ** 2, 1],
    ]


def _linked_designs(s: int, l: int):
    if s < 1 or l < 2:
        raise ValueError("linked_designs needs s >= 1 and l >= 2")
    return [
        [1, 16 * l * s * s, 32 * s * s - 2, 16 * l * s * s, 1],
        [1, 4 * l * s, 0, -4 * l * s, -1],
        [1, 0, -2, 0, 1],
        [1, -4 * s, 0, 4 * s, -1],
        [1, -16 * s * s, 32 * s * s - 2, -16 * s * s, 1],
    ]


def _tight7(w: int):
    if w < 2:
        raise ValueError("tight7 needs w >= 2")
    k1 = Fraction(w**4 * (3 * w * w - 5), 2)
    k2 = (-16 * w * w + 6 * w**4 + 10) * (-1 + w * w)
    r1 = Fraction((3 * w * w - 5) * w**3, 2)
    rows = [
        [1, k1, k2, k1, 1],
        [1, r1, 0, -r1, -1],
        [1, (w * w - 2) * w * w, -2 * (w * w - 1) ** 2, (w * w - 2) * w * w, 1],
        [1, -w, 0, w, -1],
        [1, -w * w, -2 + 2 * w * w, -w * w, 1],
    ]
    return [[_exact(x) for x in row] for row in rows]


LEECH11_P = (
    (1, 4600, 47104, 93150, 47104, 4600, 1),
    (1, 2300, 11776, 0, -11776, -2300, -1),
    (1, 1000, 1024, -4050, 1024, 1000, 1),
    (1, 350, -704, 0, 704, -350, -1),
    (1, 76, -320, 486, -320, 76, 1),
    (1, -10, 16, 0, -16, 10, -1),
    (1, -20, 64, -90, 64, -20, 1),
)


def sporadic(name: str, **params) -> SporadicScheme:
    name = name.replace("-", "_")
    if name == "penttila_williford":
        rows = _penttila_williford(int(params["s"]))
    elif name == "linked_designs":
        rows = _linked_designs(int(params["s"]), int(params["l"]))
    elif name == "tight7":
        rows = _tight7(int(params["w"]))
    elif name == "leech11":
        if params:
            raise ValueError("leech11 takes no parameters")
        rows = LEECH11_P
    else:
        raise ValueError(f"unknown sporadic scheme {name!r}")
    P = tuple(tuple(int(x) for x in r) for r in rows)
    view = scheme_from_eigenmatrix(P)
    return SporadicScheme(name, dict(params), P, view.n)


SPORADIC_PARAMS = {"penttila_williford": ("s",), "linked_designs": ("s", "l"), "tight7": ("w",), "leech11": ()}


def parse_sporadic(text: str) -> SporadicScheme:
    """``leech11``, ``tight7:2``, ``penttila_williford:3``, ``linked_designs:1,3``."""
    name, _, rest = text.partition(":")
    name = name.replace("-", "_")
    if name not in SPORADIC_PARAMS:
        raise ValueError(f"unknown sporadic scheme {name!r}")
    keys = SPORADIC_PARAMS[name]
    vals = [int(x) for x in rest.split(",") if x.strip()] if rest else []
    if len(vals) != len(keys):
        raise ValueError(f"{name} expects parameters {keys}")
    return sporadic(name, **dict(zip(keys, vals)))


# ---------------------------------------------------------------- eigenvalue formulas


def _srg_complement(v: int, eigs: list[int]) -> list[int]:
    k = eigs[0]
    return [v - 1 - k] + [-1 - x for x in eigs[1:]]


def _q_number(q: int, e: int) -> int:
    """``q (q**e - 1) / (q - 1)``."""
    return q * (q**e - 1) // (q - 1)


CLASSICAL_FAMILIES = {
    "grassmann": lambda n, d, q: ClassicalParameters(d, q, q, _q_number(q, n - d)),
    "hamming": lambda d, q: ClassicalParameters(d, 1, 0, q - 1),
    "doob": lambda d: ClassicalParameters(d, 1, 0, 3),
    "dual_polar_2A": lambda d, q, variant="odd": ClassicalParameters(d, q * q, 0, q if variant == "odd" else q**3),
    "dual_polar_BC": lambda d, q: ClassicalParameters(d, q, 0, q),
    "half_dual_polar": lambda d, q, variant="2d": ClassicalParameters(
        d, q * q, q * q + q, _q_number(q, 2 * d - 1 if variant == "2d" else 2 * d + 1)
    ),
    "lie_exceptional": lambda q: ClassicalParameters(3, q**4, _q_number(q, 4), _q_number(q, 9)),
    "affine_E6": lambda q: ClassicalParameters(3, q**4, q**4 - 1, q**9 - 1),
    "alternating_forms": lambda d, q, variant="2d": ClassicalParameters(
        d, q * q, q * q - 1, q ** (2 * d - 1 if variant == "2d" else 2 * d + 1) - 1
    ),
    "hermitian_forms": lambda d, q: ClassicalParameters(d, -q, -q - 1, -((-q) ** d) - 1),
    "johnson": lambda n, d: ClassicalParameters(d, 1, 1, n - d),
}


def family_eigenvalues(family: str, **params) -> IntegerSpectrum:
    """Distinct eigenvalues of a named family (sorted decreasing)."""
    if family == "gq_point":
        s, t = params["s"], params["t"]
        return IntegerSpectrum.from_values([s * (t + 1), s - 1, -t - 1])
    if family == "gq_point_complement":
        s, t = params["s"], params["t"]
        v = (s + 1) * (s * t + 1)
        return IntegerSpectrum.from_values(_srg_complement(v, [s * (t + 1), s - 1, -t - 1]))
    if family == "oa":
        n, m = params["n"], params["m"]
        return IntegerSpectrum.from_values([m * (n - 1), n - m, -m])
    if family == "oa_complement":
        n, m = params["n"], params["m"]
        return IntegerSpectrum.from_values(_srg_complement(n * n, [m * (n - 1), n - m, -m]))
    if family == "johnson_middle":
        n = params["n"]
        return IntegerSpectrum.from_values([(n - j) ** 2 - j for j in range(n + 1)])
    if family == "doubled_odd":
        n = params["n"]
        js = [j for j in range(2 * n + 3) if j != n + 1]
        return IntegerSpectrum.from_values([(-1) ** j * (n + 1 - j) for j in js])
    if family == "halved_cube":
        d = params["d"]
        return IntegerSpectrum.from_values([math.comb(2 * d, 2) - 2 * i * (2 * d - i) for i in range(d + 1)])
    if family in CLASSICAL_FAMILIES:
        return classical_eigenvalues(CLASSICAL_FAMILIES[family](**params))
    raise ValueError(f"unsupported family {family!r}")


# published distinct spectra of graphs not constructed here
PUBLISHED_SPECTRA = {
    "meixner": (176, 44, 8, -4, -16),
    "golay_shortened_truncated_coset": (21, 9, 5, 1, -3, -7, -11),
    "golay_shortened_coset": (22, 8, 6, 0, -2, -8, -10),
    "golay_truncated_double_coset": (22, 10, 6, 2, -2, -6, -10, -22),
    "golay_double_coset": (23, 9, 7, 1, -1, -7, -9, -23),
    "double_hoffman_singleton": (7, 3, 2, -2, -3, -7),
    "double_gewirtz": (10, 4, 2, -2, -4, -10),
    "double_77": (16, 6, 2, -2, -6, -16),
    "double_higman_sims": (22, 8, 2, -2, -8, -22),
}

NAMED_ARRAYS = {
    "wells": IntersectionArray((5, 4, 1, 1), (1, 1, 4, 5)),
    "dodecahedron": IntersectionArray((3, 2, 1, 1, 1), (1, 1, 1, 2, 3)),
    "petersen": IntersectionArray((3, 2), (1, 1)),
}


# ---------------------------------------------------------------- name resolution


@dataclass(frozen=True)
class CatalogItem:
    """What a catalog name resolves to: exactly one of the payload fields is set."""

    label: str
    graph: Graph | None = None
    array: IntersectionArray | None = None
    spectrum: IntegerSpectrum | None = None
    pscheme: SporadicScheme | None = None
    partner: int | None = None


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def resolve(name: str) -> CatalogItem:
    """Resolve ``hypercube:3``, ``cover:28,2,10``, ``sporadic:leech11``, ... ."""
    if name.startswith("catalog:"):
        name = name[len("catalog:"):]
    head, _, rest = name.partition(":")
    head = head.replace("_", "-")
    args = _ints(rest) if rest and head not in ("sporadic", "family", "published") else []
    if head == "hypercube":
        return CatalogItem(name, graph=hypercube(*args))
    if head == "cocktail-party":
        return CatalogItem(name, graph=cocktail_party(*args))
    if head == "cycle":
        return CatalogItem(name, graph=cycle(*args))
    if head == "complete":
        return CatalogItem(name, graph=complete_graph(*args))
    if head == "petersen":
        return CatalogItem(name, graph=petersen())
    if head == "dodecahedron":
        return CatalogItem(name, graph=dodecahedron())
    if head == "oa":
        n, m = args
        if m <= 3:
            return CatalogItem(name, graph=orthogonal_array_graph(n, m))
        return CatalogItem(name, spectrum=family_eigenvalues("oa", n=n, m=m))
    if head == "hadamard-graph":
        return CatalogItem(name, graph=hadamard_graph(sylvester_hadamard(*args)))
    if head == "hadamard-cover":
        return CatalogItem(name, graph=hadamard_cover(symmetric_constant_diagonal_hadamard(*args)))
    if head == "cover":
        n, r, c = args
        return CatalogItem(name, array=CoverParameters(n, r, c).array())
    if head in ("wells",):
        return CatalogItem(name, array=NAMED_ARRAYS["wells"])
    if head == "sporadic":
        return CatalogItem(name, pscheme=parse_sporadic(rest))
    if head == "published":
        if rest not in PUBLISHED_SPECTRA:
            raise ValueError(f"unknown published spectrum {rest!r}")
        return CatalogItem(name, spectrum=IntegerSpectrum(PUBLISHED_SPECTRA[rest]))
    if head == "family":
        fam, _, ptxt = rest.partition(":")
        kw = {}
        for part in filter(None, ptxt.split(",")):
            k, _, v = part.partition("=")
            kw[k.strip()] = v.strip() if k.strip() == "variant" else int(v)
        return CatalogItem(name, spectrum=family_eigenvalues(fam, **kw))
    raise ValueError(f"unknown catalog name {name!r}")
