#!/usr/bin/env python3
"""Fast-path vs naive-path crossover table.

Runs the bench sweep on a family of extensions of a fixed (p, r) pair
and prints per-degree operation totals side by side.  The fast path
costs a near-constant number of products plus Frobenius maps, the naive
exponent grows with m, so the ratio should fall as m grows.
"""

import argparse
import sys

from rootfield.bench import parse_sweep, run_sweep, write_csv


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sweep", default="q=3 m=9..61:4 r=5",
                    help="inline sweep spec (default: %(default)s)")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--csv", help="also write the raw rows to this path")
    args = ap.parse_args()

    rows = run_sweep(parse_sweep(args.sweep), seed=args.seed)
    if args.csv:
        with open(args.csv, "w") as fh:
            write_csv(rows, fh)

    by_m: dict = {}
    for row in rows:
        by_m.setdefault((row.p, row.d, row.m, row.r), {})[row.path_tag] = row

    print(f"{'q^m':>8} {'r':>3} {'n':>4} {'fast m+s':>9} {'frob':>6} "
          f"{'naive m+s':>10} {'ratio':>6}")
    for (p, d, m, r), paths in sorted(by_m.items()):
        fast = paths.get("coprime_fast") or paths.get("ramified_fast")
        naive = paths.get("naive_fallback")
        if fast is None or naive is None:
            continue
        ft = fast.mults + fast.squarings
        nt = naive.mults + naive.squarings
        label = f"{p ** d}^{m}"
        print(f"{label:>8} {r:>3} {fast.n or '':>4} {ft:>9} "
              f"{fast.frobenius:>6} {nt:>10} {ft / nt:>6.2f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
