"""Heap-merged sparse multiplication.

The product f*g is computed by merging the #f unevaluated streams f_i*g
with a binary heap keyed by the monomial of the would-be product term.
Each stream keeps a cursor into g's term list, so "the rest of g" costs
nothing to represent.  The heap never holds more than one entry per stream
(#f entries), every (i, j) pair is extracted exactly once (#f*#g
extractions), and output terms are emitted greatest monomial first, so the
result list is built by O(1) appends.

Geobucket-sourced variants: convert the geobucket to a list first, stream
each nonempty bucket separately (up to #f * #buckets heap entries), or a
hybrid that folds small buckets into one list and streams the large ones.
"""

from __future__ import annotations

import heapq
from enum import Enum

from . import poly
from .counters import tick_coeff_add, tick_coeff_mul, tick_heap_extraction
from .errors import OrderMismatchError
from .geobucket import Geobucket
from .monomial import ExponentVector, MonomialOrder, ev_add, ev_compare
from .poly import Polynomial, Term


class _HeapKey:
    """Wraps an exponent vector so heapq pops the extremal monomial first."""

    __slots__ = ("ev", "order", "descending")

    def __init__(self, ev: ExponentVector, order: MonomialOrder, descending: bool):
        self.ev = ev
        self.order = order
        self.descending = descending

    def __eq__(self, other) -> bool:
        return self.ev.exponents == other.ev.exponents

    def __lt__(self, other) -> bool:
        c = ev_compare(self.order, self.ev, other.ev)
        return c > 0 if self.descending else c < 0


class MergeHeap:
    """Binary max-heap (or min-heap) of (monomial, payload) entries.

    Ties on equal monomials fall through to the payload, so payloads must be
    totally ordered; stream indices make runs deterministic.
    """

    def __init__(
        self, order: MonomialOrder, descending: bool = True, count_extractions: bool = True
    ):
        self.order = order
        self.descending = descending
        self.count_extractions = count_extractions
        self._items: list[tuple[_HeapKey, object]] = []

    def __len__(self) -> int:
        return len(self._items)

    def push(self, ev: ExponentVector, payload) -> None:
        heapq.heappush(self._items, (_HeapKey(ev, self.order, self.descending), payload))

    def pop(self) -> tuple[ExponentVector, object]:
        key, payload = heapq.heappop(self._items)
        if self.count_extractions:
            tick_heap_extraction()
        return key.ev, payload

    def peek_key(self) -> ExponentVector:
        return self._items[0][0].ev


class GbRoute(Enum):
    CONVERT_FIRST = "convert"
    PER_BUCKET_STREAMS = "per-bucket"
    HYBRID = "hybrid"


def _merge_streams(
    f: Polynomial,
    g_lists: list[tuple[Term, ...]],
    order: MonomialOrder,
    max_entries: int | None = None,
) -> Polynomial:
    """Heap-merge the streams f_i x g for every g term list in g_lists."""
    heap = MergeHeap(order)
    for i, ft in enumerate(f.terms):
        for li, gterms in enumerate(g_lists):
            if gterms:
                heap.push(ev_add(ft.degrees, gterms[0].degrees), (i, li, 0))
    out: list[Term] = []
    cur_ev: ExponentVector | None = None
    cur_coeff = 0
    while len(heap):
        if max_entries is not None:
            assert len(heap) <= max_entries
        ev, (i, li, j) = heap.pop()
        gterms = g_lists[li]
        tick_coeff_mul()
        c = f.terms[i].coeff * gterms[j].coeff
        if cur_ev is not None and cur_ev.exponents == ev.exponents:
            tick_coeff_add()
            cur_coeff = cur_coeff + c
        else:
            if cur_ev is not None and cur_coeff != 0:
                out.append(Term(cur_ev, cur_coeff))
            cur_ev, cur_coeff = ev, c
        if j + 1 < len(gterms):
            heap.push(ev_add(f.terms[i].degrees, gterms[j + 1].degrees), (i, li, j + 1))
    if cur_ev is not None and cur_coeff != 0:
        out.append(Term(cur_ev, cur_coeff))
    return Polynomial(order, tuple(out))


def mul_heap(f: Polynomial, g: Polynomial) -> Polynomial:
    """Johnson multiplication: f supplies the streams, g the term list."""
    if f.order is not g.order:
        raise OrderMismatchError(f"{f.order} vs {g.order}")
    if not f.terms or not g.terms:
        return poly.zero(f.order)
    return _merge_streams(f, [g.terms], f.order, max_entries=len(f.terms))


def mul_heap_gb(
    f: Polynomial,
    g: Geobucket,
    route: GbRoute = GbRoute.CONVERT_FIRST,
    hybrid_threshold: int = 16,
) -> Polynomial:
    """Multiply f by the value of a geobucket without caller-side conversion."""
    if f.order is not g.order:
        raise OrderMismatchError(f"{f.order} vs {g.order}")
    if route is GbRoute.CONVERT_FIRST:
        return mul_heap(f, g.normalize())
    if not f.terms:
        return poly.zero(f.order)
    if route is GbRoute.PER_BUCKET_STREAMS:
        lists = [bk.terms for bk in g.buckets[1:] if bk.terms]
    else:  # hybrid: fold small buckets into one list, stream large ones
        small = poly.zero(g.order)
        lists = []
        for bk in g.buckets[1:]:
            if not bk.terms:
                continue
            if len(bk.terms) <= hybrid_threshold:
                small = poly.add(small, bk)
            else:
                lists.append(bk.terms)
        if small.terms:
            lists.append(small.terms)
    if not lists:
        return poly.zero(f.order)
    return _merge_streams(f, lists, f.order, max_entries=len(f.terms) * len(lists))
