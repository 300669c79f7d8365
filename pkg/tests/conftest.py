"""Shared fixtures and generators for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from polycert import MonomialOrder, VariableSet, ev_make, poly_from_terms

ORDERS = [MonomialOrder.LEX, MonomialOrder.GRLEX, MonomialOrder.GREVLEX]


def random_poly(rng: random.Random, order, nterms, nvars=3, max_exp=5, rational=False):
    """Random polynomial; actual term count may be lower after combining."""
    pairs = []
    for _ in range(nterms):
        ev = ev_make(tuple(rng.randrange(max_exp + 1) for _ in range(nvars)))
        c = rng.choice([-3, -2, -1, 1, 2, 3])
        if rational:
            c = Fraction(c, rng.choice([1, 2, 3, 5]))
        pairs.append((ev, c))
    return poly_from_terms(order, pairs)


def disjoint_interleaved(order, l, m, n):
    """Three univariate polynomials with pairwise-disjoint supports arranged so
    every merge in p+(q+r) and (p+q)+r is worst case (one trailing element).

    Exponent 0 goes to r, 1 to p, 2 to q; the rest are dealt round-robin."""
    supports = [[1], [2], [0]]
    need = [l - 1, m - 1, n - 1]
    e = 3
    i = 0
    while sum(need) > 0:
        if need[i] > 0:
            supports[i].append(e)
            e += 1
            need[i] -= 1
        i = (i + 1) % 3
    return tuple(
        poly_from_terms(order, [(ev_make((x,)), 1) for x in s]) for s in supports
    )


@pytest.fixture
def rng():
    return random.Random(20260823)


# The 13-term cofactor from the elliptic-curve nonsingularity computation;
# strictly descending under grlex with precedence x > y > z > p > q.
BIG_COFACTOR_VARS = VariableSet(("x", "y", "z", "p", "q"))
BIG_COFACTOR_TEXT = (
    "256/3*p^12*x^2 + 128*q*p^11*x*z + 2304*q^2*p^9*x^2 + 2592*q^3*p^8*x*z "
    "- 64*q*p^10*y^2 + 23328*q^4*p^6*x^2 + 17496*q^5*p^5*x*z - 1296*q^3*p^7*y^2 "
    "+ 104976*q^6*p^3*x^2 + 39366*q^7*p^2*x*z - 8748*q^5*p^4*y^2 "
    "+ 177147*q^8*x^2 - 19683*q^7*p*y^2"
)
