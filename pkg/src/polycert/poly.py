"""Distributed sparse polynomials as strictly sorted term lists.

A polynomial is a tuple of terms, strictly decreasing under its monomial
order, with no zero coefficients; the empty tuple is zero.  Coefficients are
exact: Python ints or :class:`fractions.Fraction` (both arbitrary precision,
and both nontrivial rings, so the degenerate 0=1 ring never arises).

Addition is the classic sorted merge, implemented iteratively; the remaining
length of both inputs is asserted to shrink each step (the loop variant).
Every merge step in which both inputs are nonempty costs exactly one
monomial comparison, so adding disjoint supports of sizes m and n costs at
most m+n-1 comparisons.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .counters import tick_coeff_add, tick_coeff_mul
from .errors import EmptyPolynomialError, OrderMismatchError
from .monomial import ExponentVector, MonomialOrder, ev_add, ev_compare

Coefficient = Union[int, Fraction]


@dataclass(frozen=True)
class Term:
    degrees: ExponentVector
    coeff: Coefficient


@dataclass(frozen=True)
class Polynomial:
    order: MonomialOrder
    terms: tuple[Term, ...]

    def is_zero(self) -> bool:
        return not self.terms


def zero(order: MonomialOrder) -> Polynomial:
    return Polynomial(order, ())


def poly_from_terms(
    order: MonomialOrder,
    pairs: Iterable[tuple[ExponentVector, Coefficient]],
) -> Polynomial:
    """Normalize an unsorted term sequence: sort, combine duplicates, drop zeros."""
    combined: dict[tuple[int, ...], tuple[ExponentVector, Coefficient]] = {}
    for ev, c in pairs:
        key = ev.exponents
        if key in combined:
            combined[key] = (ev, combined[key][1] + c)
        else:
            combined[key] = (ev, c)
    entries = [(ev, c) for ev, c in combined.values() if c != 0]
    entries.sort(
        key=functools.cmp_to_key(lambda s, t: ev_compare(order, s[0], t[0])),
        reverse=True,
    )
    return Polynomial(order, tuple(Term(ev, c) for ev, c in entries))


def _check_orders(p: Polynomial, q: Polynomial) -> None:
    if p.order is not q.order:
        raise OrderMismatchError(f"{p.order} vs {q.order}")


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    """Merge-add two sorted polynomials."""
    _check_orders(p, q)
    pt, qt = p.terms, q.terms
    np_, nq = len(pt), len(qt)
    i = j = 0
    out: list[Term] = []
    while i < np_ and j < nq:
        variant = (np_ - i) + (nq - j)
        c = ev_compare(p.order, pt[i].degrees, qt[j].degrees)
        if c > 0:
            out.append(pt[i])
            i += 1
        elif c < 0:
            out.append(qt[j])
            j += 1
        else:
            s = pt[i].coeff + qt[j].coeff
            tick_coeff_add()
            if s != 0:
                out.append(Term(pt[i].degrees, s))
            i += 1
            j += 1
        assert (np_ - i) + (nq - j) < variant
    out.extend(pt[i:])
    out.extend(qt[j:])
    return Polynomial(p.order, tuple(out))


def negate(p: Polynomial) -> Polynomial:
    return Polynomial(p.order, tuple(Term(t.degrees, -t.coeff) for t in p.terms))


def scale(c: Coefficient, p: Polynomial) -> Polynomial:
    if c == 0:
        return zero(p.order)
    terms = []
    for t in p.terms:
        tick_coeff_mul()
        prod = c * t.coeff
        if prod != 0:
            terms.append(Term(t.degrees, prod))
    return Polynomial(p.order, tuple(terms))


def term_mul(t: Term, p: Polynomial) -> Polynomial:
    """Multiply p by a single term (scale and shift); preserves sortedness."""
    terms = []
    for s in p.terms:
        tick_coeff_mul()
        prod = t.coeff * s.coeff
        if prod != 0:
            terms.append(Term(ev_add(t.degrees, s.degrees), prod))
    return Polynomial(p.order, tuple(terms))


def mul_naive(p: Polynomial, q: Polynomial) -> Polynomial:
    """Schoolbook product: fold term-times-q through merge addition."""
    _check_orders(p, q)
    acc = zero(p.order)
    for t in p.terms:
        acc = add(acc, term_mul(t, q))
    return acc


def leading_term(p: Polynomial) -> Term:
    if not p.terms:
        raise EmptyPolynomialError("zero polynomial has no leading term")
    return p.terms[0]


def term_count(p: Polynomial) -> int:
    return len(p.terms)


def is_well_formed(p: Polynomial) -> bool:
    """Strictly decreasing term list, no zero coefficients."""
    if any(t.coeff == 0 for t in p.terms):
        return False
    return all(
        ev_compare(p.order, p.terms[k].degrees, p.terms[k + 1].degrees) > 0
        for k in range(len(p.terms) - 1)
    )
