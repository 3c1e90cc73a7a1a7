"""Enumeration and exact counting of maximal independent sets.

Enumeration is Bron-Kerbosch with Tomita-style pivoting, run directly on
independent sets (the maximal-clique search on the complement, without
building the complement). Counting applies exact reductions first:
components multiply, isolated vertices are free, and a leaf ``x`` with
neighbour ``y`` splits the count as ``m(G_x) + m(G_y)``. Anything left
irreducible is counted by the enumerator.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Callable, Iterator

from .graph import Graph, GraphInputError, bits, component_masks, to_set

DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    """Enumeration emitted more sets than the configured budget allows."""

    def __init__(self, budget: int):
        self.budget = budget
        super().__init__(f"maximal independent set budget of {budget} exceeded")


def default_budget() -> int:
    raw = os.environ.get("MISX_BUDGET")
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_BUDGET


def _closed(g: Graph) -> list[int]:
    return [nb | 1 << v for v, nb in enumerate(g.adj)]


def _pick_pivot(closed: list[int], p: int, x: int) -> int:
    # fewest branches: vertex of P|X whose closed neighbourhood meets P least,
    # i.e. maximum degree into P in the complement; ties go to the smallest index
    best, best_cost = -1, None
    for u in bits(p | x):
        cost = (closed[u] & p).bit_count()
        if best_cost is None or cost < best_cost:
            best, best_cost = u, cost
            if cost <= 1:
                break
    return best


def _bk_masks(closed: list[int], r: int, p: int, x: int) -> Iterator[int]:
    if not p:
        if not x:
            yield r
        return
    u = _pick_pivot(closed, p, x)
    for v in bits(p & closed[u]):
        cv = closed[v]
        yield from _bk_masks(closed, r | 1 << v, p & ~cv, x & ~cv)
        p &= ~(1 << v)
        x |= 1 << v


def _bk_count(closed: list[int], p: int, x: int, tick: Callable[[int], None]) -> int:
    if not p:
        if x:
            return 0
        tick(1)
        return 1
    u = _pick_pivot(closed, p, x)
    total = 0
    for v in bits(p & closed[u]):
        cv = closed[v]
        total += _bk_count(closed, p & ~cv, x & ~cv, tick)
        p &= ~(1 << v)
        x |= 1 << v
    return total


def iter_mis_masks(g: Graph, within: int | None = None, budget: int | None = None) -> Iterator[int]:
    """Maximal independent sets of ``G[within]`` as bitmasks, in search order."""
    budget = default_budget() if budget is None else budget
    live = g.all_mask if within is None else within
    emitted = 0
    for r in _bk_masks(_closed(g), 0, live, 0):
        emitted += 1
        if emitted > budget:
            raise BudgetExceeded(budget)
        yield r


def iter_mis(g: Graph, budget: int | None = None) -> Iterator[frozenset[int]]:
    for r in iter_mis_masks(g, budget=budget):
        yield to_set(r)


def enumerate_mis(g: Graph, budget: int | None = None) -> list[frozenset[int]]:
    """All maximal independent sets of ``g`` in deterministic search order.

    The null graph has exactly one, the empty set.
    """
    return list(iter_mis(g, budget))


@dataclass(frozen=True)
class MISReport:
    count: int
    sets: tuple[frozenset[int], ...] | None
    trace: tuple[str, ...]


class _ReductionCounter:
    def __init__(self, g: Graph, budget: int):
        self.g = g
        self.closed = _closed(g)
        self.budget = budget
        self.spent = 0
        self.memo: dict[int, int] = {}
        self.trace: list[str] = []

    def tick(self, k: int) -> None:
        self.spent += k
        if self.spent > self.budget:
            raise BudgetExceeded(self.budget)

    def count(self, live: int) -> int:
        if not live:
            return 1
        hit = self.memo.get(live)
        if hit is not None:
            return hit
        comps = component_masks(self.g, live)
        if len(comps) > 1:
            self.trace.append("component-product")
            result = 1
            for c in comps:
                result *= self.count(c)
        else:
            result = self._connected(live)
        self.memo[live] = result
        return result

    def _connected(self, comp: int) -> int:
        if comp & (comp - 1) == 0:
            self.trace.append("isolated-vertex")
            return 1
        adj = self.g.adj
        for x in bits(comp):
            nb = adj[x] & comp
            if nb & (nb - 1) == 0:
                y = nb.bit_length() - 1
                self.trace.append("leaf")
                return self.count(comp & ~self.closed[x]) + self.count(comp & ~self.closed[y])
        self.trace.append("enumerate")
        return _bk_count(self.closed, comp, 0, self.tick)


def count_mis(g: Graph, *, with_sets: bool = False, budget: int | None = None) -> MISReport:
    """Exact number of maximal independent sets, reductions first.

    Memoisation is keyed on the live vertex mask and lives for this call
    only. ``with_sets`` additionally enumerates the sets themselves.
    """
    budget = default_budget() if budget is None else budget
    counter = _ReductionCounter(g, budget)
    value = counter.count(g.all_mask)
    sets = tuple(enumerate_mis(g, budget)) if with_sets else None
    return MISReport(value, sets, tuple(counter.trace))


def count_mis_by_enumeration(g: Graph, budget: int | None = None) -> int:
    """Plain pivoted count with no reductions; the cross-check for :func:`count_mis`."""
    budget = default_budget() if budget is None else budget
    spent = 0

    def tick(k: int) -> None:
        nonlocal spent
        spent += k
        if spent > budget:
            raise BudgetExceeded(budget)

    return _bk_count(_closed(g), g.all_mask, 0, tick)


def mis_count(g: Graph, within: int | None = None) -> int:
    """Shorthand for the count of ``G[within]`` (whole graph by default)."""
    counter = _ReductionCounter(g, default_budget())
    return counter.count(g.all_mask if within is None else within)


def max_independent_mask(g: Graph, within: int | None = None) -> int:
    """A maximum independent set of ``G[within]`` as a bitmask.

    Branch and bound on bitsets: vertices of degree <= 1 are always taken,
    otherwise branch on a maximum-degree vertex (smallest index), pruning a
    branch whose size bound cannot beat the incumbent.
    """
    adj = g.adj
    memo: dict[int, int] = {}

    def solve(live: int) -> int:
        if not live:
            return 0
        hit = memo.get(live)
        if hit is not None:
            return hit
        comps = component_masks(g, live)
        if len(comps) > 1:
            out = 0
            for c in comps:
                out |= solve(c)
            memo[live] = out
            return out
        best_v, best_d = -1, -1
        for v in bits(live):
            d = (adj[v] & live).bit_count()
            if d <= 1:
                out = 1 << v | solve(live & ~(adj[v] | 1 << v))
                memo[live] = out
                return out
            if d > best_d:
                best_v, best_d = v, d
        v = best_v
        take = 1 << v | solve(live & ~(adj[v] | 1 << v))
        rest = live & ~(1 << v)
        if rest.bit_count() > take.bit_count():
            skip = solve(rest)
            if skip.bit_count() > take.bit_count():
                take = skip
        memo[live] = take
        return take

    return solve(g.all_mask if within is None else within)


def alpha(g: Graph) -> int:
    return max_independent_mask(g).bit_count()


@dataclass(frozen=True)
class BranchVerdict:
    vertex: int
    m: int
    m_localized: int
    m_removed: int

    @property
    def rhs(self) -> int:
        return self.m_localized + self.m_removed

    @property
    def holds(self) -> bool:
        return self.m <= self.rhs


def check_branch_inequality(g: Graph, x: int) -> BranchVerdict:
    """Counts for ``m(G) <= m(G_x) + m(G \\ x)`` at vertex ``x``."""
    if not 0 <= x < g.n:
        raise GraphInputError(f"vertex {x} outside 0..{g.n - 1}")
    full = g.all_mask
    return BranchVerdict(
        vertex=x,
        m=mis_count(g),
        m_localized=mis_count(g, full & ~(g.adj[x] | 1 << x)),
        m_removed=mis_count(g, full & ~(1 << x)),
    )
