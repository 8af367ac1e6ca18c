"""Dense walk on the 240 E8 roots, one graph per inner-product relation.

Scans fidelity from a root to its antipode; relation 2 (orthogonality) reaches 1
at pi/6, relations 1 and 3 never do.

    python scripts/e8_tight7_relations.py [--grid 20000]
"""

import argparse
import itertools

import numpy as np

from pstwalk.graph import Graph
from pstwalk.numerics import RationalPiTime, float_eigensystem
from pstwalk.pst import PstCertificate, numeric_verify


def e8_roots() -> np.ndarray:
    roots = []
    for i, j in itertools.combinations(range(8), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            v = np.zeros(8)
            v[i], v[j] = si, sj
            roots.append(v)
    for signs in itertools.product((0.5, -0.5), repeat=8):
        if sum(s < 0 for s in signs) % 2 == 0:
            roots.append(np.array(signs))
    return np.array(roots)


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--grid", type=int, default=20000)
    args = ap.parse_args()
    r = e8_roots()
    gram = np.rint(r @ r.T).astype(int)
    anti = int(np.flatnonzero(gram[0] == -2)[0])
    for rel, ip, label in ((1, 1, "1/2"), (2, 0, "0"), (3, -1, "-1/2")):
        g = Graph.from_adjacency((gram == ip).astype(np.int64))
        dec = float_eigensystem(g.adjacency())
        if rel == 2:
            rep = numeric_verify(g, PstCertificate(True, 2, tau=RationalPiTime.pi_over(6)), partner=anti, decomp=dec)
        else:
            rep = numeric_verify(g, PstCertificate(False, rel), partner=anti, decomp=dec, grid=args.grid)
        summary = {k: (round(v, 6) if isinstance(v, float) else v) for k, v in rep.values.items()}
        eigs = sorted({int(x) for x in np.rint(dec.eigenvalues)}, reverse=True)
        print(f"relation {rel} (inner product {label}): eigenvalues {eigs}")
        print(f"   {'agrees with the exact verdict' if rep.passed else 'DISAGREES with the exact verdict'}: {summary}")


if __name__ == "__main__":
    main()
