#!/usr/bin/env python3
"""Cross-check closed form, witness builder and oracle on random rational alphabets.

    python scripts/random_sweep.py --trials 50 --seed 0 --max-n 40
"""

import argparse
import random
import sys
from fractions import Fraction as F

from avgiv.alphabet import make_alphabet
from avgiv.ivset import Direction
from avgiv.oracle import consistency_report, rational_grid


def random_alphabet(rng, max_len, max_den):
    r = rng.randint(2, max_len)
    vals = set()
    while len(vals) < r:
        vals.add(F(rng.randint(-10 * max_den, 10 * max_den), rng.randint(1, max_den)))
    return make_alphabet(sorted(vals))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-n", type=int, default=40)
    ap.add_argument("--max-len", type=int, default=4)
    ap.add_argument("--max-den", type=int, default=6)
    ap.add_argument("--grid-den", type=int, default=8)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    bad = 0
    for i in range(args.trials):
        a = random_alphabet(rng, args.max_len, args.max_den)
        d = rng.choice(list(Direction))
        grid = [a.first + (a.last - a.first) * x
                for x in rational_grid(F(0), F(1), args.grid_den)]
        rep = consistency_report(a, args.max_n, 4, grid, d)
        mark = "ok " if rep.ok else "BAD"
        print(f"{i:4d} {mark} {d.value:<10} {a}  family: "
              + (", ".join(map(str, rep.family)) or "-"))
        for v in rep.violations:
            print(f"       {v}")
        bad += not rep.ok
    print(f"{args.trials - bad}/{args.trials} alphabets consistent")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
