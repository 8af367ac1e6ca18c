"""Symmetric association schemes and their eigenmatrices.

A scheme is stored by its *relation matrix* ``R`` with ``R[u, v] = i`` iff
``(u, v)`` lies in class ``A_i``; the 0-1 class matrices are derived from it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

import numpy as np

from .drg import IntersectionArray
from .graph import Graph
from .numerics import (
    NonIntegerReport,
    RationalMatrix,
    as_int_if_integral,
    rational_inverse,
)


class SchemeError(ValueError):
    pass


@dataclass
class AxiomReport:
    identity: bool
    symmetric: bool
    partition: bool
    closure: bool
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.identity and self.symmetric and self.partition and self.closure

    def __bool__(self):
        return self.ok


def _relation_from_classes(classes: Sequence[np.ndarray]) -> tuple[np.ndarray | None, AxiomReport]:
    mats = [np.asarray(a) for a in classes]
    n = mats[0].shape[0]
    fails = []
    identity = np.array_equal(mats[0], np.eye(n, dtype=mats[0].dtype))
    if not identity:
        fails.append("(1) A_0 is not the identity")
    symmetric = all(np.array_equal(a, a.T) for a in mats)
    zero_one = all(np.isin(a, (0, 1)).all() for a in mats)
    if not symmetric:
        fails.append("(2) some class is not symmetric")
    total = sum(a.astype(np.int64) for a in mats)
    partition = zero_one and bool(np.all(total == 1))
    if not partition:
        fails.append("(3) classes are not 0-1 matrices summing to J")
        return None, AxiomReport(identity, symmetric, False, False, fails)
    rel = np.zeros((n, n), dtype=np.int32)
    for i, a in enumerate(mats):
        rel[a == 1] = i
    return rel, AxiomReport(identity, symmetric, partition, True, fails)


def _intersection_numbers(rel: np.ndarray, d: int) -> np.ndarray | None:
    """``p[i, j, k]``, or ``None`` when some ``A_i A_j`` is not constant on a class."""
    flat = rel.ravel()
    order = np.argsort(flat, kind="stable")
    counts = np.bincount(flat, minlength=d + 1)
    if np.any(counts == 0):
        return None
    starts = np.concatenate([[0], np.cumsum(counts)[:-1]])
    mats = [(rel == i).astype(np.float32) for i in range(d + 1)]
    p = np.zeros((d + 1, d + 1, d + 1), dtype=np.int64)
    for i in range(d + 1):
        for j in range(i, d + 1):
            prod = (mats[i] @ mats[j]).ravel()[order]
            lo = np.minimum.reduceat(prod, starts)
            hi = np.maximum.reduceat(prod, starts)
            if np.any(lo != hi):
                return None
            p[i, j] = p[j, i] = np.rint(lo).astype(np.int64)
    return p


@dataclass(frozen=True, eq=False)
class AssociationScheme:
    """Classes ``A_0..A_d`` on ``n`` points plus intersection numbers ``p[i, j, k]``."""

    relation: np.ndarray
    p: np.ndarray
    metric: bool = False

    @property
    def n(self) -> int:
        return self.relation.shape[0]

    @property
    def d(self) -> int:
        return self.p.shape[0] - 1

    @property
    def valencies(self) -> tuple[int, ...]:
        return tuple(int(self.p[i, i, 0]) for i in range(self.d + 1))

    def class_matrix(self, i: int) -> np.ndarray:
        return (self.relation == i).astype(np.int64)

    @property
    def classes(self) -> list[np.ndarray]:
        return [self.class_matrix(i) for i in range(self.d + 1)]

    @classmethod
    def from_classes(cls, classes: Sequence[np.ndarray], metric: bool = False) -> "AssociationScheme":
        rel, report = _relation_from_classes(classes)
        if rel is None or not report.identity or not report.symmetric:
            raise SchemeError("; ".join(report.failures))
        p = _intersection_numbers(rel, len(classes) - 1)
        if p is None:
            raise SchemeError("(4) classes are not closed under multiplication")
        return cls(rel, p, metric)

    def intersection_array(self) -> IntersectionArray:
        """``b_i = p_{1,i+1}^i``, ``c_i = p_{1,i-1}^i`` (meaningful for metric schemes)."""
        if not self.metric:
            raise SchemeError("intersection array needs a metric (distance) ordering")
        d = self.d
        b = [int(self.p[1, i + 1, i]) for i in range(d)]
        c = [int(self.p[1, i - 1, i]) for i in range(1, d + 1)]
        return IntersectionArray(tuple(b), tuple(c))

    def to_dict(self) -> dict:
        classes = []
        for i in range(1, self.d + 1):
            us, vs = np.nonzero(np.triu(self.relation == i, 1))
            classes.append([[int(u), int(v)] for u, v in zip(us, vs)])
        return {"n": self.n, "d": self.d, "metric": self.metric, "classes": classes}

    @classmethod
    def from_dict(cls, data: dict) -> "AssociationScheme":
        n = data["n"]
        rel = np.zeros((n, n), dtype=np.int32)
        rel[:] = -1
        np.fill_diagonal(rel, 0)
        for i, coords in enumerate(data["classes"], 1):
            for u, v in coords:
                rel[u, v] = rel[v, u] = i
        if np.any(rel < 0):
            raise SchemeError("classes do not cover every pair")
        d = len(data["classes"])
        p = _intersection_numbers(rel, d)
        if p is None:
            raise SchemeError("(4) classes are not closed under multiplication")
        return cls(rel, p, bool(data.get("metric", False)))


def verify_axioms(s: AssociationScheme | Sequence[np.ndarray]) -> AxiomReport:
    """Check axioms (1)-(4); never raises, failures are listed in the report."""
    classes = s.classes if isinstance(s, AssociationScheme) else list(s)
    rel, report = _relation_from_classes(classes)
    if rel is None:
        return report
    if _intersection_numbers(rel, len(classes) - 1) is None:
        report.closure = False
        report.failures.append("(4) some A_i A_j is not constant on a class")
    return report


def scheme_from_graph(g: Graph) -> AssociationScheme:
    """Distance scheme of a distance-regular graph (classes = distance-``i`` graphs)."""
    if not g.is_connected():
        raise SchemeError("disconnected")
    dist = g.distance_matrix().astype(np.int32)
    d = int(dist.max())
    p = _intersection_numbers(dist, d)
    if p is None:
        raise SchemeError("not distance-regular")
    return AssociationScheme(dist, p, metric=True)


def complete_scheme(n: int) -> AssociationScheme:
    """``{I, J - I}`` on ``n >= 2`` points."""
    if n < 2:
        raise ValueError("need n >= 2")
    rel = 1 - np.eye(n, dtype=np.int32)
    p = np.zeros((2, 2, 2), dtype=np.int64)
    p[0, 0, 0] = 1
    p[0, 1, 1] = p[1, 0, 1] = 1
    p[1, 1, 0] = n - 1
    p[1, 1, 1] = n - 2
    return AssociationScheme(rel, p, metric=True)


def tensor_product(s1: AssociationScheme, s2: AssociationScheme) -> AssociationScheme:
    """Classes ``A_i (x) B_j``, indexed ``i * (e + 1) + j``; ``A_0 (x) B_0`` is the identity."""
    e1 = s2.d + 1
    n1, n2 = s1.n, s2.n
    rel = (s1.relation[:, None, :, None] * e1 + s2.relation[None, :, None, :]).reshape(n1 * n2, n1 * n2)
    p = np.einsum("ijk,abc->iajbkc", s1.p, s2.p).reshape(
        (s1.d + 1) * e1, (s1.d + 1) * e1, (s1.d + 1) * e1
    )
    return AssociationScheme(rel.astype(np.int32), p, metric=False)


@dataclass(frozen=True)
class InvolutionClass:
    index: int
    permutation: tuple[int, ...]


def involution_classes(s: AssociationScheme) -> list[InvolutionClass]:
    """Classes that are fixed-point-free involutory permutation matrices."""
    out = []
    for i in range(1, s.d + 1):
        if s.valencies[i] != 1:
            continue
        a = s.class_matrix(i)
        sq = a @ a
        if not (np.array_equal(sq, np.eye(s.n, dtype=sq.dtype)) and not np.any(np.diag(a))):
            continue
        out.append(InvolutionClass(i, tuple(int(x) for x in np.argmax(a, axis=1))))
    return out


@dataclass(frozen=True, eq=False)
class Eigenmatrices:
    """``P[j][i]`` = eigenvalue of ``A_i`` on ``E_j``; ``Q = n P^{-1}``."""

    P: tuple[tuple[int, ...], ...]
    Q: tuple[tuple, ...]
    multiplicities: tuple[int, ...]
    n: int
    relation: np.ndarray | None = None

    @property
    def d(self) -> int:
        return len(self.P) - 1

    def column(self, i: int) -> tuple[int, ...]:
        """Eigenvalues of class ``A_i`` listed per idempotent."""
        return tuple(row[i] for row in self.P)

    def sign_partition(self, t_index: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        col = self.column(t_index)
        plus = tuple(j for j, x in enumerate(col) if x == 1)
        minus = tuple(j for j, x in enumerate(col) if x == -1)
        return plus, minus

    def idempotent(self, j: int) -> RationalMatrix:
        """``E_j = (1/n) sum_i Q_ij A_i`` as an exact rational matrix."""
        if self.relation is None:
            raise ValueError("no vertex-level data attached")
        vals = [Fraction(self.Q[i][j]) / self.n for i in range(self.d + 1)]
        den = math.lcm(*(v.denominator for v in vals))
        table = np.array([int(v * den) for v in vals], dtype=object)
        num = table[self.relation]
        return RationalMatrix(num, den)

    @cached_property
    def idempotents(self) -> list[RationalMatrix]:
        return [self.idempotent(j) for j in range(self.d + 1)]

    def to_dict(self) -> dict:
        def enc(x):
            x = Fraction(x)
            return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

        return {
            "n": self.n,
            "P": [list(map(int, row)) for row in self.P],
            "Q": [[enc(x) for x in row] for row in self.Q],
            "multiplicities": list(self.multiplicities),
        }


def _characters(p: np.ndarray, seed: int = 0, attempts: int = 8):
    """Integer characters of the Bose-Mesner algebra, or float rows if not integral.

    Characters are the common left eigenvectors of the regular representation
    ``(L_i)[k, j] = p[i, j, k]`` normalised to first entry 1; a generic
    combination of the ``L_i`` separates them.  A rounded row is accepted
    only if ``chi_i chi_j = sum_k p_ij^k chi_k`` holds exactly.
    """
    size = p.shape[0]
    L = [p[i].T.astype(np.float64) for i in range(size)]  # L[i][k, j] = p[i, j, k]
    rng = np.random.default_rng(seed)
    for _ in range(attempts):
        coeffs = rng.integers(1, 1000, size=size)
        combo = sum(c * m for c, m in zip(coeffs, L))
        w, vl = np.linalg.eig(combo.T)
        if len(set(np.round(w, 6).tolist())) < size:
            continue
        rows = []
        for col in range(size):
            vec = vl[:, col]
            if abs(vec[0]) < 1e-12:
                break
            chi = vec / vec[0]
            # chi_i is the eigenvalue of L_i on chi
            vals = np.array([(chi @ L[i])[0] for i in range(size)])
            rows.append(vals)
        else:
            return rows
    raise SchemeError("could not separate the characters of the algebra")


def eigenmatrices(s: AssociationScheme) -> Eigenmatrices | NonIntegerReport:
    """Exact ``P``/``Q`` of a scheme with integer eigenvalues.

    Ordering: ``E_0 = J/n`` first, then decreasing eigenvalue on ``A_1``,
    ties broken by ``A_2``, ``A_3``, ...
    """
    return eigenmatrices_from_numbers(s.p, s.n, relation=s.relation)


def eigenmatrices_from_numbers(p: np.ndarray, n: int, relation=None) -> Eigenmatrices | NonIntegerReport:
    rows = _characters(p)
    approx = tuple(sorted((float(np.real(r[1])) for r in rows), reverse=True)) if p.shape[0] > 1 else ()
    int_rows = []
    for r in rows:
        if np.max(np.abs(r.imag)) > 1e-6 or np.max(np.abs(r.real - np.rint(r.real))) > 1e-6:
            return NonIntegerReport(approx, "non-integer scheme eigenvalues")
        int_rows.append(tuple(int(x) for x in np.rint(r.real)))
    pi = p.astype(object)
    for chi in int_rows:
        c = np.array(chi, dtype=object)
        if not np.array_equal(np.outer(c, c), pi @ c):
            return NonIntegerReport(approx, "non-integer scheme eigenvalues")
    valencies = tuple(int(p[i, i, 0]) for i in range(p.shape[0]))
    if valencies not in int_rows:
        raise SchemeError("trivial character missing")
    rest = sorted((r for r in int_rows if r != valencies), key=lambda r: tuple(-x for x in r[1:]))
    P = (valencies, *rest)
    if len(set(P)) != len(P):
        raise SchemeError("characters are not distinct")
    Qf = [[Fraction(n) * x for x in row] for row in rational_inverse(P)]
    Q = tuple(tuple(as_int_if_integral(x) for x in row) for row in Qf)
    mults = []
    for x in Q[0]:
        x = Fraction(x)
        if x.denominator != 1 or x <= 0:
            raise SchemeError(f"non-integral multiplicity {x}")
        mults.append(int(x))
    return Eigenmatrices(P, Q, tuple(mults), n, relation)


@dataclass(frozen=True)
class PSchemeView:
    """A scheme known only through its eigenmatrix ``P``."""

    P: tuple[tuple[int, ...], ...]
    n: int

    @property
    def d(self) -> int:
        return len(self.P) - 1

    @property
    def valencies(self) -> tuple[int, ...]:
        return self.P[0]

    def column(self, i: int) -> tuple[int, ...]:
        return tuple(row[i] for row in self.P)

    def involution_candidates(self) -> list[int]:
        return [
            i
            for i in range(1, self.d + 1)
            if self.P[0][i] == 1 and all(abs(x) == 1 for x in self.column(i))
        ]

    def sign_partition(self, t_index: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        col = self.column(t_index)
        return (
            tuple(j for j, x in enumerate(col) if x > 0),
            tuple(j for j, x in enumerate(col) if x < 0),
        )

    def dual(self) -> tuple[tuple[Fraction, ...], ...]:
        """``Q = n P^{-1}``."""
        return tuple(tuple(Fraction(self.n) * x for x in row) for row in rational_inverse(self.P))

    def to_dict(self) -> dict:
        return {"n": self.n, "P": [list(r) for r in self.P]}


def scheme_from_eigenmatrix(P, n: int | None = None) -> PSchemeView:
    rows = [tuple(int(x) for x in r) for r in np.asarray(P, dtype=object).tolist()]
    size = len(rows)
    if size < 2 or any(len(r) != size for r in rows):
        raise SchemeError("P must be square with at least one relation")
    if any(r[0] != 1 for r in rows):
        raise SchemeError("first column of P must be all ones")
    if any(x <= 0 for x in rows[0]):
        raise SchemeError("first row of P (valencies) must be positive")
    if len(set(rows)) != size:
        raise SchemeError("rows of P must be distinct")
    total = sum(rows[0])
    if n is not None and n != total:
        raise SchemeError(f"valencies sum to {total}, not n = {n}")
    return PSchemeView(tuple(rows), total)
