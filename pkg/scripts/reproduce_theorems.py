#!/usr/bin/env python3
"""Print the unskippable sets for a handful of reference alphabets and
cross-check each against the brute-force oracle.

    python scripts/reproduce_theorems.py [--max-n 60] [--count 5] [--grid-den 10]
"""

import argparse
import sys
import time
from fractions import Fraction as F

from avgiv.alphabet import make_alphabet
from avgiv.exact import sqrt
from avgiv.ivset import Direction, Empty, characterize, enumerate_family
from avgiv.oracle import consistency_report, rational_grid

CASES = [
    ("binary {0,1}", [0, 1]),
    ("affine binary {2,7}", [2, 7]),
    ("ternary {0,1/2,1}", [0, F(1, 2), 1]),
    ("ternary {0,2/3,1}", [0, F(2, 3), 1]),
    ("shifted ternary {2,3,5}", [2, 3, 5]),
    ("four letters {0,1/3,1/2,1}", [0, F(1, 3), F(1, 2), 1]),
    ("irrational interior {0,sqrt2/2,1}", [0, sqrt(2) / 2, 1]),
    ("irrational endpoints {sqrt2,2sqrt2,3sqrt2}", [sqrt(2), 2 * sqrt(2), 3 * sqrt(2)]),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=60)
    ap.add_argument("--count", type=int, default=5)
    ap.add_argument("--grid-den", type=int, default=10)
    args = ap.parse_args()

    failures = 0
    for label, values in CASES:
        a = make_alphabet(values)
        print(f"== {label}")
        for d in Direction:
            char = characterize(a, d)
            if isinstance(char, Empty):
                print(f"  {d.value:>10}: empty")
            else:
                elems = ", ".join(map(str, enumerate_family(char, args.count)))
                print(f"  {d.value:>10}: M={char.M}  {elems}, ...")
            grid = [a.first + (a.last - a.first) * x
                    for x in rational_grid(F(0), F(1), args.grid_den)]
            t0 = time.perf_counter()
            rep = consistency_report(a, args.max_n, args.count, grid, d)
            dt = time.perf_counter() - t0
            status = "ok" if rep.ok else f"{len(rep.violations)} VIOLATIONS"
            print(f"  {'':>10}  oracle check (n <= {args.max_n}, {len(grid)} grid points): "
                  f"{status} [{dt:.2f}s]")
            for v in rep.violations:
                print(f"    {v}")
            failures += not rep.ok
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
