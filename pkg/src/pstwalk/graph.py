"""Minimal undirected simple graph used throughout the package."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, shortest_path


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Edges are stored as sorted ``(u, v)`` pairs with ``u < v`` so that two
    graphs built from the same edge set compare (and serialize) identically.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple | None = field(default=None, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "Graph":
        clean = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            clean.add((min(u, v), max(u, v)))
        return cls(n, tuple(sorted(clean)), None if labels is None else tuple(labels))

    @classmethod
    def from_adjacency(cls, a, labels=None) -> "Graph":
        a = np.asarray(a)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency matrix must be square")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency matrix must be symmetric")
        if np.any(np.diag(a) != 0):
            raise ValueError("adjacency matrix must have zero diagonal")
        us, vs = np.nonzero(np.triu(a, 1))
        return cls.from_edges(a.shape[0], zip(us.tolist(), vs.tolist()), labels)

    @classmethod
    def from_labelled_edges(cls, vertices: Iterable, edges: Iterable[tuple]) -> "Graph":
        """Build from hashable vertex labels; vertices are ordered lexicographically."""
        labels = sorted(set(vertices))
        index = {x: i for i, x in enumerate(labels)}
        return cls.from_edges(len(labels), ((index[x], index[y]) for x, y in edges), labels)

    def adjacency(self, dtype=np.int64) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        if self.edges:
            e = np.array(self.edges)
            a[e[:, 0], e[:, 1]] = 1
            a[e[:, 1], e[:, 0]] = 1
        return a

    def degrees(self) -> np.ndarray:
        return self.adjacency().sum(axis=1)

    def _sparse(self):
        a = self.adjacency(dtype=np.int8)
        return csr_matrix(a)

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        ncomp, _ = connected_components(self._sparse(), directed=False)
        return ncomp == 1

    def distance_matrix(self) -> np.ndarray:
        """All-pairs BFS distances; ``-1`` marks unreachable pairs."""
        d = shortest_path(self._sparse(), method="D", unweighted=True, directed=False)
        out = np.where(np.isinf(d), -1, d).astype(np.int64)
        return out

    def is_bipartite(self) -> bool:
        if not self.edges:
            return True
        _, comp = connected_components(self._sparse(), directed=False)
        d = self.distance_matrix()
        roots = {c: int(np.argmax(comp == c)) for c in np.unique(comp)}
        parity = np.array([d[roots[comp[v]], v] % 2 for v in range(self.n)])
        e = np.array(self.edges)
        # an edge joining two vertices of equal BFS parity closes an odd cycle
        return not np.any(parity[e[:, 0]] == parity[e[:, 1]])


def read_edge_list(path: str | Path) -> Graph:
    """Parse ``u v`` pairs (0-indexed, whitespace separated, ``#`` comments)."""
    edges = []
    top = -1
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer vertex in {raw!r}") from None
        if u < 0 or v < 0:
            raise ValueError(f"line {lineno}: negative vertex index")
        edges.append((u, v))
        top = max(top, u, v)
    if top < 0:
        raise ValueError("edge list is empty")
    return Graph.from_edges(top + 1, edges)
