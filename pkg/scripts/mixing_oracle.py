"""Compare mixing-matrix eigenvalues from (P, Q) with a dense U(t) o conj(U(t)) eigensolve.

    python scripts/mixing_oracle.py [--max-d 10] [--samples 20]
"""

import argparse
import math

import numpy as np

from pstwalk import catalog
from pstwalk.drg import eigenmatrices_from_array, spectrum_from_array
from pstwalk.numerics import RationalPiTime, float_eigensystem, gcd_of_differences
from pstwalk.pst import drg_pst_test, mixing_eigenvalues, mixing_matrix, mixing_pst_test
from pstwalk.scheme import scheme_from_graph


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-d", type=int, default=10)
    ap.add_argument("--samples", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)

    graphs = {f"Q{d}": catalog.hypercube(d) for d in range(1, args.max_d + 1)}
    graphs.update({f"CP{m}": catalog.cocktail_party(m) for m in range(2, 9)})
    graphs["Had4"] = catalog.hadamard_graph(catalog.sylvester_hadamard(4))
    graphs["Cover16"] = catalog.hadamard_cover(catalog.symmetric_constant_diagonal_hadamard(16))

    print(f"{'graph':<8} {'n':>5}  {'max |err|':>10}  mixing@tau  exact")
    for name, g in graphs.items():
        arr = scheme_from_graph(g).intersection_array()
        spec = spectrum_from_array(arr)
        P, Q = eigenmatrices_from_array(arr, spec)
        alpha = gcd_of_differences(spec.eigenvalues)
        dec = float_eigensystem(g.adjacency())
        ts = [math.pi / alpha, math.pi / (2 * alpha), math.pi / 2, math.pi / 4]
        ts += list(rng.uniform(0, 2 * math.pi, max(0, args.samples - 4)))
        err = 0.0
        for t in ts:
            mu = mixing_eigenvalues(P, Q, spec, g.n, t).eigenvalues
            want = np.sort(np.repeat(mu, spec.multiplicities))
            err = max(err, float(np.abs(np.linalg.eigvalsh(mixing_matrix(dec, t)) - want).max()))
        cert = drg_pst_test(arr)
        tau = cert.tau if cert.verdict else RationalPiTime.pi_over(alpha)
        mix = mixing_pst_test(P, Q, spec, g.n, tau)
        print(f"{name:<8} {g.n:>5}  {err:>10.2e}  {str(mix):<10}  {cert.verdict}")


if __name__ == "__main__":
    main()
