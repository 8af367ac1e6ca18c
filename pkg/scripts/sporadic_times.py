"""Per-relation verdicts for the sporadic P-matrix schemes over a parameter range.

    python scripts/sporadic_times.py [--max 9]
"""

import argparse

from pstwalk.catalog import sporadic
from pstwalk.pst import pst_in_scheme


def report(name: str, **params) -> None:
    view = sporadic(name, **params).view()
    cells = []
    for rel in range(1, view.d + 1):
        c = pst_in_scheme(view, rel)
        cells.append(f"r{rel}:{c.tau}" if c.verdict else f"r{rel}:-")
    label = name + "".join(f" {k}={v}" for k, v in params.items())
    print(f"{label:<28} n={view.n:<8} T={view.involution_candidates()}  " + "  ".join(cells))


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max", type=int, default=9, help="largest s / w parameter")
    args = ap.parse_args()
    report("leech11")
    for w in range(2, min(args.max, 12) + 1):
        report("tight7", w=w)
    for s in range(3, args.max + 1):
        report("penttila_williford", s=s)
    for s in range(1, 4):
        for l in range(2, 6):
            report("linked_designs", s=s, l=l)


if __name__ == "__main__":
    main()
