"""Simple undirected graphs on dense vertex labels ``0..n-1``.

Adjacency is held as one Python integer per vertex, used as a bitset, so
neighbourhood algebra (``N[S]``, complements, intersections) is a handful of
integer operations. Graphs are immutable once built.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


class GraphInputError(ValueError):
    """Raised for malformed graph input (bad endpoint, self-loop, bad vertex)."""


VertexSet = frozenset  # frozenset[int]; the currency of covers, independent sets, ...


def bits(mask: int) -> Iterator[int]:
    """Yield the positions of set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def to_set(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with bitset adjacency.

    ``adj[v]`` has bit ``u`` set iff ``uv`` is an edge. Construct through
    :func:`from_edge_list` or one of the generators; the constructor
    validates symmetry, loop-freeness and range.
    """

    n: int
    adj: tuple[int, ...] = field(repr=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphInputError(f"negative vertex count {self.n}")
        if len(self.adj) != self.n:
            raise GraphInputError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphInputError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise GraphInputError(f"self-loop at vertex {v}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphInputError(f"asymmetric adjacency between {v} and {u}")

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return tuple(to_set(nb) for nb in self.adj)

    def neighbors(self, v: int) -> frozenset[int]:
        return to_set(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def closed_neighborhood_mask(self, mask: int) -> int:
        """``N[S]`` for the vertex set encoded by ``mask``."""
        out = mask
        for v in bits(mask):
            out |= self.adj[v]
        return out

    def __str__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class Bipartition:
    a: frozenset[int]
    b: frozenset[int]


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on ``n`` vertices; duplicate edges collapse, loops are rejected."""
    if n < 0:
        raise GraphInputError(f"negative vertex count {n}")
    adj = [0] * n
    for e in edges:
        if len(e) != 2:
            raise GraphInputError(f"edge {e!r} is not a pair")
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphInputError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty_graph(n: int = 0) -> Graph:
    return Graph(n, (0,) * n)


def _check_members(g: Graph, s: Iterable[int]) -> int:
    mask = 0
    for v in s:
        if not 0 <= v < g.n:
            raise GraphInputError(f"vertex {v} outside 0..{g.n - 1}")
        mask |= 1 << v
    return mask


def subgraph_from_mask(g: Graph, mask: int) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on the vertices of ``mask``, relabelled in increasing order."""
    old = list(bits(mask))
    vmap = {v: i for i, v in enumerate(old)}
    adj = []
    for v in old:
        nb = 0
        for u in bits(g.adj[v] & mask):
            nb |= 1 << vmap[u]
        adj.append(nb)
    return Graph(len(old), tuple(adj)), vmap


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Return ``G[S]`` and the old-to-new vertex map."""
    return subgraph_from_mask(g, _check_members(g, s))


def localization(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Return ``G_S = G \\ N[S]`` and the vertex map."""
    mask = _check_members(g, s)
    return subgraph_from_mask(g, g.all_mask & ~g.closed_neighborhood_mask(mask))


def remove_vertices(g: Graph, u: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    return subgraph_from_mask(g, g.all_mask & ~_check_members(g, u))


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of ``G[within]`` as bitmasks, ordered by smallest vertex."""
    rest = g.all_mask if within is None else within
    out = []
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= g.adj[v]
            grow &= rest & ~comp
            comp |= grow
            frontier = grow
        out.append(comp)
        rest &= ~comp
    return out


def connected_components(g: Graph) -> list[tuple[Graph, dict[int, int]]]:
    return [subgraph_from_mask(g, c) for c in component_masks(g)]


def is_bipartite(g: Graph) -> Bipartition | None:
    """Two-colour ``g`` by BFS; return the bipartition or ``None``.

    See :func:`odd_cycle` for a certificate in the negative case.
    """
    side = _two_colour(g)[0]
    if side is None:
        return None
    a = frozenset(v for v in range(g.n) if side[v] == 0)
    return Bipartition(a, frozenset(range(g.n)) - a)


def odd_cycle(g: Graph) -> list[int] | None:
    """An odd cycle of ``g`` as a vertex list, or ``None`` when ``g`` is bipartite."""
    side, conflict, parent = _two_colour(g)
    if side is not None:
        return None
    u, v = conflict
    # walk both endpoints up the BFS tree to their common ancestor
    path_u = [u]
    while parent[path_u[-1]] is not None:
        path_u.append(parent[path_u[-1]])
    path_v = [v]
    while parent[path_v[-1]] is not None:
        path_v.append(parent[path_v[-1]])
    ancestors = set(path_u)
    i = 0
    while path_v[i] not in ancestors:
        i += 1
    lca = path_v[i]
    cycle = path_u[: path_u.index(lca) + 1] + path_v[:i][::-1]
    return cycle


def _two_colour(g: Graph):
    side: list[int | None] = [None] * g.n
    parent: list[int | None] = [None] * g.n
    for root in range(g.n):
        if side[root] is not None:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in bits(g.adj[v]):
                if side[u] is None:
                    side[u] = 1 - side[v]
                    parent[u] = v
                    queue.append(u)
                elif side[u] == side[v]:
                    return None, (v, u), parent
    return side, None, parent


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    adj: list[int] = []
    for h in graphs:
        off = len(adj)
        adj.extend(nb << off for nb in h.adj)
    return Graph(len(adj), tuple(adj))


def parse_edge_list_text(text: str) -> tuple[Graph, dict[str, int]]:
    """Parse the ``u v``-per-line edge-list format.

    An optional first data line holding a single integer fixes ``n`` and
    requires integer labels in ``0..n-1``. Without it, labels are arbitrary
    tokens mapped to dense indices: numerically sorted when all are
    integers, otherwise by first appearance. A line with one token after the
    header declares an isolated vertex. ``#`` starts a comment line.
    Returns the graph and the label-to-index map.
    """
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    n: int | None = None
    if rows and len(rows[0][1]) == 1:
        lineno, toks = rows[0]
        try:
            n = int(toks[0])
        except ValueError:
            n = None
        else:
            rows = rows[1:]
            if n < 0:
                raise GraphInputError(f"line {lineno}: negative vertex count")
    labels: list[str] = []
    seen: set[str] = set()
    pairs: list[tuple[int, list[str]]] = []
    for lineno, toks in rows:
        if len(toks) not in (1, 2):
            raise GraphInputError(f"line {lineno}: expected 'u v', got {' '.join(toks)!r}")
        for t in toks:
            if t not in seen:
                seen.add(t)
                labels.append(t)
        pairs.append((lineno, toks))
    if n is not None:
        index = {}
        for lineno, toks in pairs:
            for t in toks:
                try:
                    v = int(t)
                except ValueError:
                    raise GraphInputError(f"line {lineno}: non-integer vertex {t!r}") from None
                if not 0 <= v < n:
                    raise GraphInputError(f"line {lineno}: vertex {v} outside 0..{n - 1}")
                index[t] = v
    else:
        try:
            ordered = sorted(labels, key=int)
        except ValueError:
            ordered = labels
        index = {t: i for i, t in enumerate(ordered)}
        n = len(ordered)
    edges = []
    for lineno, toks in pairs:
        if len(toks) == 2:
            u, v = index[toks[0]], index[toks[1]]
            if u == v:
                raise GraphInputError(f"line {lineno}: self-loop at {toks[0]}")
            edges.append((u, v))
    return from_edge_list(n, edges), index


def to_edge_list_text(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
