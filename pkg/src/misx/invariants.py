"""Matching, induced matching and covering numbers with certificates."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from .graph import Graph, bits, to_set
from .mis import max_independent_mask, mis_count

Edge = tuple[int, int]


def is_vertex_cover(g: Graph, cover) -> bool:
    return all(u in cover or v in cover for u, v in g.edges())


def is_matching(g: Graph, edges) -> bool:
    seen: set[int] = set()
    for u, v in edges:
        if not g.has_edge(u, v) or u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def is_induced_matching(g: Graph, edges) -> bool:
    if not is_matching(g, edges):
        return False
    for (a, b), (c, d) in itertools.combinations(list(edges), 2):
        if any(g.has_edge(x, y) for x in (a, b) for y in (c, d)):
            return False
    return True


def _augment_from(root: int, nbrs: list[list[int]], match: list[int]) -> bool:
    """Grow an alternating tree from ``root``; flip the path if one is found."""
    n = len(match)
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    used[root] = True
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for to in nbrs[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    while to != -1:
                        pv = parent[to]
                        nxt = match[pv]
                        match[to] = pv
                        match[pv] = to
                        to = nxt
                    return True
                used[match[to]] = True
                queue.append(match[to])
    return False


def maximum_matching(g: Graph) -> list[Edge]:
    """Maximum cardinality matching by Edmonds' blossom algorithm.

    Roots are tried in index order and neighbours scanned in increasing
    order, so the matching returned is deterministic.
    """
    nbrs = [list(bits(nb)) for nb in g.adj]
    match = [-1] * g.n
    for root in range(g.n):
        if match[root] == -1 and nbrs[root]:
            _augment_from(root, nbrs, match)
    return [(v, match[v]) for v in range(g.n) if match[v] > v]


def matching_number(g: Graph) -> tuple[int, list[Edge]]:
    m = maximum_matching(g)
    return len(m), m


def _conflict_graph(g: Graph) -> tuple[Graph, list[Edge]]:
    # one vertex per edge of g; two edges conflict when they cannot both sit in
    # an induced matching (shared endpoint, or an edge of g joining them)
    edges = sorted(g.edges(), key=lambda e: (g.degree(e[0]) + g.degree(e[1]), e))
    closed = [g.adj[u] | g.adj[v] | 1 << u | 1 << v for u, v in edges]
    ends = [1 << u | 1 << v for u, v in edges]
    adj = [0] * len(edges)
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            if closed[i] & ends[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(len(edges), tuple(adj)), edges


def induced_matching_number(g: Graph) -> tuple[int, list[Edge]]:
    """Exact ``nu_0`` as a maximum independent set of the edge-conflict graph.

    Edges are ordered by endpoint-degree sum before the search, which puts
    low-conflict edges first.
    """
    h, edges = _conflict_graph(g)
    chosen = sorted(edges[i] for i in bits(max_independent_mask(h)))
    return len(chosen), chosen


def covering_number(g: Graph, method: str = "gallai") -> tuple[int, frozenset[int]]:
    """``beta`` and a minimum vertex cover.

    ``method="gallai"`` takes the complement of a maximum independent set.
    ``method="exhaustive"`` scans vertex subsets by size; it is slow and
    exists only as an independent check.
    """
    if method == "gallai":
        cover = to_set(g.all_mask & ~max_independent_mask(g))
        return len(cover), cover
    if method == "exhaustive":
        edges = g.edges()
        for k in range(g.n + 1):
            for combo in itertools.combinations(range(g.n), k):
                s = set(combo)
                if all(u in s or v in s for u, v in edges):
                    return k, frozenset(s)
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class KEVerdict:
    beta: int
    nu: int

    @property
    def equal(self) -> bool:
        return self.beta == self.nu


def is_koenig_egervary(g: Graph) -> KEVerdict:
    return KEVerdict(beta=covering_number(g)[0], nu=matching_number(g)[0])


@dataclass(frozen=True)
class InvariantBundle:
    n: int
    m: int
    alpha: int
    beta: int
    nu: int
    nu0: int
    cover: frozenset[int]
    matching: tuple[Edge, ...]
    induced_matching: tuple[Edge, ...]

    def check(self) -> None:
        """Raise ``AssertionError`` if the bundle's internal relations fail."""
        assert self.nu0 <= self.nu <= self.beta, (self.nu0, self.nu, self.beta)
        assert self.alpha + self.beta == self.n
        assert len(self.cover) == self.beta
        assert len(self.matching) == self.nu
        assert len(self.induced_matching) == self.nu0
        assert self.m >= 1

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "alpha": self.alpha,
            "beta": self.beta,
            "nu": self.nu,
            "nu0": self.nu0,
            "cover": sorted(self.cover),
            "matching": [list(e) for e in self.matching],
            "induced_matching": [list(e) for e in self.induced_matching],
        }


def full_bundle(g: Graph) -> InvariantBundle:
    beta, cover = covering_number(g)
    nu, matching = matching_number(g)
    nu0, induced = induced_matching_number(g)
    bundle = InvariantBundle(
        n=g.n,
        m=mis_count(g),
        alpha=g.n - beta,
        beta=beta,
        nu=nu,
        nu0=nu0,
        cover=cover,
        matching=tuple(matching),
        induced_matching=tuple(induced),
    )
    bundle.check()
    return bundle
