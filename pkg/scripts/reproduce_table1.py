"""Enumerate (n, 2, c) covers of K_n with perfect state transfer and compare with the reference rows.

    python scripts/reproduce_table1.py [--max-n 280] [--show-filtered]
"""

import argparse
import time

from pstwalk.catalog import TABLE1, audit_covers


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=280)
    ap.add_argument("--show-filtered", action="store_true")
    args = ap.parse_args()

    t0 = time.perf_counter()
    audit = audit_covers(args.max_n)
    elapsed = time.perf_counter() - t0

    ref = {(n, c): tau for n, c, _, tau in TABLE1 if n < args.max_n}
    print(f"{'n':>5} {'c':>5} {'delta':>6}  {'time':<6} reference")
    for r in audit.table1:
        mark = "ok" if ref.get((r.n, r.c)) == r.tau else "EXTRA"
        print(f"{r.n:>5} {r.c:>5} {r.delta:>6}  {str(r.tau):<6} {mark}")
    missing = set(ref) - {(r.n, r.c) for r in audit.table1}
    print(f"\n{len(audit.table1)} rows, {len(missing)} missing, {len(audit.extra_candidates)} extra, {elapsed:.2f}s")

    print("\nHadamard-type stream (delta = +-2):")
    for r in audit.hadamard:
        print(f"  n={r.n:<4} c={r.c:<4} delta={r.delta:>2}  {r.tau}")

    if args.show_filtered:
        print("\nfiltered parameter sets (Delta square only):")
        for n, c, delta, why in audit.filtered:
            print(f"  ({n}, 2, {c}) delta={delta}: {why}")


if __name__ == "__main__":
    main()
