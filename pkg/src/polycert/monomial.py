"""Exponent vectors over a fixed variable set, and monomial orders.

Variable precedence is fixed at :class:`VariableSet` construction: earlier
names are more significant (the "main" variable comes first).  Exponent
vectors cache their total degree so that total-degree orders can compare
totals in O(1) before falling back to a positional scan.

Exponents and totals are plain Python ints, so arbitrarily large degrees
(x^1000000000 and friends) are fine.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .counters import tick_comparison
from .errors import DimensionError, DomainError


class MonomialOrder(Enum):
    LEX = "lex"
    GRLEX = "grlex"
    GREVLEX = "grevlex"


@dataclass(frozen=True)
class VariableSet:
    """Ordered, distinct variable names; earlier = more significant."""

    names: tuple[str, ...]

    def __post_init__(self):
        if not self.names:
            raise DomainError("variable set must be nonempty")
        if len(set(self.names)) != len(self.names):
            raise DomainError(f"duplicate variable names in {self.names}")

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise DomainError(f"unknown variable {name!r}") from None

    def exponent_vector(self, exponents) -> ExponentVector:
        ev = ev_make(exponents)
        if len(ev.exponents) != len(self.names):
            raise DimensionError(
                f"expected {len(self.names)} exponents, got {len(ev.exponents)}"
            )
        return ev


@dataclass(frozen=True)
class ExponentVector:
    exponents: tuple[int, ...]
    total: int

    def __repr__(self) -> str:
        return f"ExponentVector{self.exponents}"


def ev_make(exponents) -> ExponentVector:
    """Build an exponent vector, caching the total degree."""
    exps = tuple(exponents)
    for e in exps:
        if not isinstance(e, int) or e < 0:
            raise DomainError(f"exponents must be naturals, got {e!r}")
    return ExponentVector(exps, sum(exps))


def ev_add(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    """Componentwise sum; the monomial product."""
    if len(a.exponents) != len(b.exponents):
        raise DimensionError(
            f"dimension mismatch: {len(a.exponents)} vs {len(b.exponents)}"
        )
    return ExponentVector(
        tuple(x + y for x, y in zip(a.exponents, b.exponents)),
        a.total + b.total,
    )


def ev_compare(order: MonomialOrder, a: ExponentVector, b: ExponentVector) -> int:
    """Compare two monomials: returns -1 (a < b), 0 (equal) or 1 (a > b).

    Counts as one monomial comparison in any open instrumentation scope.
    """
    ea, eb = a.exponents, b.exponents
    if len(ea) != len(eb):
        raise DimensionError(f"dimension mismatch: {len(ea)} vs {len(eb)}")
    tick_comparison()
    if order is MonomialOrder.LEX:
        if ea == eb:
            return 0
        return 1 if ea > eb else -1
    # total-degree orders: cached totals give the O(1) fast path
    if a.total != b.total:
        return 1 if a.total > b.total else -1
    if ea == eb:
        return 0
    if order is MonomialOrder.GRLEX:
        return 1 if ea > eb else -1
    # grevlex: rightmost differing exponent, smaller entry wins
    for x, y in zip(reversed(ea), reversed(eb)):
        if x != y:
            return 1 if x < y else -1
    return 0
