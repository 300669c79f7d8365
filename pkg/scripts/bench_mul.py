#!/usr/bin/env python3
"""Comparison-count sweep for heap vs naive multiplication.

Prints one row per size with the measured monomial comparisons and the
ratio against n*n*log2(n) for the heap engine.
"""

import argparse
import math
import random

from polycert import MonomialOrder, count_ops, ev_make, mul_heap, mul_naive, poly_from_terms


def random_poly(rng, n, spread):
    pairs = {}
    while len(pairs) < n:
        ev = ev_make(tuple(rng.randrange(spread) for _ in range(3)))
        pairs[ev.exponents] = (ev, rng.choice([-2, -1, 1, 2]))
    return poly_from_terms(MonomialOrder.GRLEX, pairs.values())


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[16, 32, 64, 128])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--skip-naive", action="store_true")
    args = ap.parse_args()
    rng = random.Random(args.seed)
    print(f"{'n':>5} {'heap cmps':>12} {'n^2 log2 n':>12} {'ratio':>7} {'naive cmps':>12}")
    for n in args.sizes:
        f = random_poly(rng, n, 40 * n)
        g = random_poly(rng, n, 40 * n)
        with count_ops() as ch:
            mul_heap(f, g)
        model = n * n * math.log2(n)
        naive = ""
        if not args.skip_naive:
            with count_ops() as cn:
                mul_naive(f, g)
            naive = cn.comparisons
        print(f"{n:>5} {ch.comparisons:>12} {model:>12.0f} "
              f"{ch.comparisons / model:>7.2f} {naive:>12}")


if __name__ == "__main__":
    main()
