"""Named graph families, family-spec strings, and exhaustive labeled catalogs.

Family specs have the form ``name:key=val,key=val``; several specs joined
with ``+`` denote a disjoint union. In sweep contexts an integer value may be
a range ``lo..hi`` (inclusive), which expands to the cartesian product.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterator

from .graph import Graph, GraphInputError, disjoint_union, from_edge_list

LABELED_LIMIT = 6


def complete(n: int) -> Graph:
    _nonneg(n=n)
    return from_edge_list(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    _nonneg(a=a, b=b)
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(m: int) -> Graph:
    """``K_{1,m}`` with centre 0."""
    _nonneg(m=m)
    return complete_bipartite(1, m)


def star_triangle(k: int) -> Graph:
    """``k`` triangles sharing vertex 0; triangle ``i`` is ``{0, 2i+1, 2i+2}``."""
    if k < 1:
        raise GraphInputError("star_triangle requires k >= 1")
    edges = []
    for i in range(k):
        u, v = 2 * i + 1, 2 * i + 2
        edges += [(0, u), (0, v), (u, v)]
    return from_edge_list(2 * k + 1, edges)


def path(n: int) -> Graph:
    _nonneg(n=n)
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphInputError("cycle requires n >= 3")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def triangles_plus_isolated(s: int, t: int) -> Graph:
    """``sK3 ∪ tK1``; triangles first, isolated vertices last."""
    _nonneg(s=s, t=t)
    return disjoint_union([complete(3)] * s + [complete(1)] * t)


def cw_bipartite(a: int, b: int, leaves: int = 1, p: float = 0.5, *, seed: int) -> Graph:
    """Random connected bipartite core with leaves hung on every A-vertex.

    Vertices ``0..a-1`` form side A, ``a..a+b-1`` side B, and the leaves
    follow, ``leaves`` per A-vertex in A order. The core is a random
    spanning tree between the sides plus every other A-B pair with
    probability ``p``. No pendant triangles are added.
    """
    if a < 1:
        raise GraphInputError("cw_bipartite requires a >= 1")
    if b < 0:
        raise GraphInputError("cw_bipartite requires b >= 0")
    if b == 0 and a != 1:
        raise GraphInputError("cw_bipartite with b = 0 needs a = 1 to stay connected")
    if leaves < 1:
        raise GraphInputError("cw_bipartite requires leaves >= 1")
    if not 0.0 <= p <= 1.0:
        raise GraphInputError("cw_bipartite requires 0 <= p <= 1")
    rng = random.Random(seed)
    side_a = list(range(a))
    side_b = list(range(a, a + b))
    edges: set[tuple[int, int]] = set()
    placed_a, placed_b = [0], []
    queue = side_a[1:] + side_b
    rng.shuffle(queue)
    while queue:
        v = queue.pop(0)
        other = placed_b if v < a else placed_a
        if not other:
            queue.append(v)
            continue
        u = rng.choice(other)
        edges.add((min(u, v), max(u, v)))
        (placed_a if v < a else placed_b).append(v)
    for i in side_a:
        for j in side_b:
            if (i, j) not in edges and rng.random() < p:
                edges.add((i, j))
    nxt = a + b
    for i in side_a:
        for _ in range(leaves):
            edges.add((i, nxt))
            nxt += 1
    return from_edge_list(nxt, sorted(edges))


def union(graphs: list[Graph]) -> Graph:
    return disjoint_union(graphs)


def _nonneg(**params: int) -> None:
    for k, v in params.items():
        if v < 0:
            raise GraphInputError(f"parameter {k} must be >= 0, got {v}")


# name -> (builder, required params, optional params with defaults)
FAMILIES: dict[str, tuple] = {
    "complete": (complete, ("n",), {}),
    "complete-bipartite": (complete_bipartite, ("a", "b"), {}),
    "star": (star, ("m",), {}),
    "star-triangle": (star_triangle, ("k",), {}),
    "path": (path, ("n",), {}),
    "cycle": (cycle, ("n",), {}),
    "triangles": (triangles_plus_isolated, ("s",), {"t": 0}),
    "cw-bipartite": (cw_bipartite, ("a", "b", "seed"), {"leaves": 1, "p": 0.5}),
}
_ALIASES = {
    "complete_bipartite": "complete-bipartite",
    "star_triangle": "star-triangle",
    "triangles_plus_isolated": "triangles",
    "cw_bipartite": "cw-bipartite",
}


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: dict = field(default_factory=dict)

    def build(self) -> Graph:
        builder, required, optional = FAMILIES[self.name]
        kwargs = {**optional, **self.params}
        return builder(**kwargs)

    def __str__(self) -> str:
        return self.name + ":" + ",".join(f"{k}={v}" for k, v in self.params.items())


def _parse_value(key: str, raw: str, allow_ranges: bool):
    if key == "p":
        try:
            return float(raw)
        except ValueError:
            raise GraphInputError(f"p must be a number, got {raw!r}") from None
    if ".." in raw and allow_ranges:
        lo, _, hi = raw.partition("..")
        try:
            return range(int(lo), int(hi) + 1)
        except ValueError:
            raise GraphInputError(f"bad range {raw!r} for {key}") from None
    try:
        return int(raw)
    except ValueError:
        raise GraphInputError(f"{key} must be an integer, got {raw!r}") from None


def _parse_one(text: str, allow_ranges: bool) -> tuple[str, dict]:
    name, _, rest = text.strip().partition(":")
    name = _ALIASES.get(name.strip(), name.strip())
    if name not in FAMILIES:
        raise GraphInputError(f"unknown family {name!r}; known: {', '.join(FAMILIES)}")
    _, required, optional = FAMILIES[name]
    params = {}
    for item in filter(None, (s.strip() for s in rest.split(","))):
        key, eq, raw = item.partition("=")
        key = key.strip()
        if not eq:
            raise GraphInputError(f"expected key=value in {item!r}")
        if key not in required and key not in optional:
            raise GraphInputError(f"family {name!r} has no parameter {key!r}")
        params[key] = _parse_value(key, raw.strip(), allow_ranges)
    missing = [k for k in required if k not in params]
    if missing:
        raise GraphInputError(f"family {name!r} missing parameter(s): {', '.join(missing)}")
    return name, params


def parse_family(text: str) -> list[FamilySpec]:
    """Parse a single (possibly ``+``-joined) family spec without ranges."""
    return [FamilySpec(*_parse_one(part, False)) for part in text.split("+")]


def generate(family: str | FamilySpec | list[FamilySpec]) -> Graph:
    if isinstance(family, str):
        family = parse_family(family)
    if isinstance(family, FamilySpec):
        return family.build()
    parts = [f.build() for f in family]
    return parts[0] if len(parts) == 1 else disjoint_union(parts)


def expand_family(text: str) -> Iterator[tuple[str, Graph]]:
    """Expand a spec with ``lo..hi`` ranges into ``(label, graph)`` pairs."""
    parts = [_parse_one(part, True) for part in text.split("+")]
    choices = []
    for name, params in parts:
        keys = list(params)
        axes = [v if isinstance(v, range) else [v] for v in params.values()]
        choices.append([FamilySpec(name, dict(zip(keys, combo))) for combo in itertools.product(*axes)])
    for combo in itertools.product(*choices):
        label = "+".join(str(s) for s in combo)
        yield label, generate(list(combo))


def edge_order(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 column-major order: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(u, v) for v in range(1, n) for u in range(v)]


def labeled_graph(n: int, edge_mask: int) -> Graph:
    adj = [0] * n
    for i, (u, v) in enumerate(edge_order(n)):
        if edge_mask >> i & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def enumerate_labeled_graphs(n: int, limit: int = LABELED_LIMIT) -> Iterator[Graph]:
    """All ``2^(n choose 2)`` labeled graphs on ``n`` vertices, by edge mask.

    Bit ``i`` of the mask selects the ``i``-th pair of :func:`edge_order`.
    """
    if n < 0:
        raise GraphInputError("n must be >= 0")
    if n > limit:
        raise GraphInputError(
            f"refusing to enumerate labeled graphs on {n} vertices "
            f"(limit {limit}; 2^{n * (n - 1) // 2} graphs)"
        )
    pairs = edge_order(n)
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        yield Graph(n, tuple(adj))
