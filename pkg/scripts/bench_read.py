#!/usr/bin/env python3
"""Input-path comparison counts: sorted fast path vs naive read vs geobucket.

Streams n already-sorted terms through each reader and prints the measured
comparison counts; the naive reader grows quadratically, the sorted reader
stays at n-1.
"""

import argparse

from polycert import (
    Geobucket,
    MonomialOrder,
    Polynomial,
    Term,
    count_ops,
    ev_make,
    read_naive,
    read_sorted,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+",
                    default=[32, 64, 128, 256, 512])
    args = ap.parse_args()
    order = MonomialOrder.GRLEX
    print(f"{'n':>6} {'sorted':>8} {'geobucket':>10} {'naive':>10}")
    for n in args.sizes:
        stream = [(ev_make((10 * (n - k),)), 1) for k in range(n)]
        with count_ops() as cs:
            read_sorted(list(stream), order)
        with count_ops() as cg:
            gb = Geobucket(order)
            for ev, c in stream:
                gb.add(Polynomial(order, (Term(ev, c),)))
            gb.normalize()
        with count_ops() as cn:
            read_naive(list(stream), order)
        print(f"{n:>6} {cs.comparisons:>8} {cg.comparisons:>10} {cn.comparisons:>10}")


if __name__ == "__main__":
    main()
