"""Cameron-Walker recognition, by definition and by structure.

A graph is Cameron-Walker when its induced matching number equals its
matching number. Structurally, each connected component is a star, a star
triangle (triangles glued at one vertex), or a connected bipartite core
``(A, B)`` in which every A-vertex carries at least one pendant leaf and
B-vertices may carry pendant triangles. Both routes are implemented
independently so they can be checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .graph import Graph, bits, component_masks, is_bipartite, subgraph_from_mask
from .invariants import InvariantBundle, induced_matching_number, matching_number


class ConsistencyFault(AssertionError):
    """Two independent recognizers disagreed; this is a bug, not bad input."""


@dataclass(frozen=True)
class Star:
    center: int
    leaves: tuple[int, ...]
    shape = "star"

    def vertices(self) -> set[int]:
        return {self.center, *self.leaves}

    def validate(self, g: Graph) -> None:
        for leaf in self.leaves:
            assert g.neighbors(leaf) == {self.center}, f"leaf {leaf} of star at {self.center}"
        assert g.neighbors(self.center) == set(self.leaves)

    def as_dict(self) -> dict:
        return {"center": self.center, "leaves": list(self.leaves)}


@dataclass(frozen=True)
class StarTriangle:
    center: int
    triangles: tuple[tuple[int, int], ...]
    shape = "star_triangle"

    def vertices(self) -> set[int]:
        return {self.center, *(v for t in self.triangles for v in t)}

    def validate(self, g: Graph) -> None:
        assert self.triangles
        outer = set()
        for u, w in self.triangles:
            assert g.neighbors(u) == {self.center, w}
            assert g.neighbors(w) == {self.center, u}
            outer.update((u, w))
        assert g.neighbors(self.center) == outer

    def as_dict(self) -> dict:
        return {"center": self.center, "triangles": [list(t) for t in self.triangles]}


@dataclass(frozen=True)
class LeafBipartite:
    a: tuple[int, ...]
    b: tuple[int, ...]
    leaves: dict[int, tuple[int, ...]]
    triangles: dict[int, tuple[tuple[int, int], ...]]
    shape = "leaf_bipartite"

    @property
    def pendant_triangle_count(self) -> int:
        return sum(len(t) for t in self.triangles.values())

    def vertices(self) -> set[int]:
        out = set(self.a) | set(self.b)
        for ls in self.leaves.values():
            out.update(ls)
        for ts in self.triangles.values():
            for t in ts:
                out.update(t)
        return out

    def validate(self, g: Graph) -> None:
        a, b = set(self.a), set(self.b)
        core = a | b
        assert a and not a & b
        for x in self.a:
            assert self.leaves.get(x), f"A-vertex {x} has no leaf"
            for leaf in self.leaves[x]:
                assert g.neighbors(leaf) == {x}
            assert g.neighbors(x) - set(self.leaves[x]) <= b
        for y, ts in self.triangles.items():
            assert y in b, f"pendant triangle on non-B vertex {y}"
            for u, w in ts:
                assert g.neighbors(u) == {y, w} and g.neighbors(w) == {y, u}
        for y in self.b:
            tri = {v for t in self.triangles.get(y, ()) for v in t}
            assert g.neighbors(y) - tri <= a
        # core connected
        start = self.a[0]
        seen, stack = {start}, [start]
        while stack:
            v = stack.pop()
            for u in g.neighbors(v) & core:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        assert seen == core, "bipartite core is disconnected"

    def as_dict(self) -> dict:
        return {
            "a": list(self.a),
            "b": list(self.b),
            "leaves": {str(k): list(v) for k, v in sorted(self.leaves.items())},
            "pendant_triangles": {str(k): [list(t) for t in v] for k, v in sorted(self.triangles.items())},
        }


@dataclass(frozen=True)
class NotCW:
    reason: str
    matching: tuple[tuple[int, int], ...]
    induced_matching: tuple[tuple[int, int], ...]
    shape = "not_cw"

    def as_dict(self) -> dict:
        return {
            "reason": self.reason,
            "matching": [list(e) for e in self.matching],
            "induced_matching": [list(e) for e in self.induced_matching],
        }


Shape = Union[Star, StarTriangle, LeafBipartite, NotCW]


@dataclass(frozen=True)
class ComponentVerdict:
    index: int
    vertices: tuple[int, ...]
    shape: Shape

    @property
    def is_cw(self) -> bool:
        return not isinstance(self.shape, NotCW)

    def as_dict(self) -> dict:
        return {"index": self.index, "vertices": list(self.vertices), "shape": self.shape.shape, **self.shape.as_dict()}


@dataclass(frozen=True)
class CWCertificate:
    components: tuple[ComponentVerdict, ...] = field(default_factory=tuple)

    @property
    def is_cw(self) -> bool:
        return all(c.is_cw for c in self.components)

    @property
    def is_cw_bipartite(self) -> bool:
        for c in self.components:
            s = c.shape
            if isinstance(s, Star):
                continue
            if isinstance(s, LeafBipartite) and s.pendant_triangle_count == 0:
                continue
            return False
        return True

    def as_dict(self) -> dict:
        return {"cameron_walker": self.is_cw, "components": [c.as_dict() for c in self.components]}


def _deg(g: Graph, v: int, comp: int) -> int:
    return (g.adj[v] & comp).bit_count()


def _match_star(g: Graph, comp: int) -> Star | None:
    verts = list(bits(comp))
    k = len(verts)
    if k == 1:
        return Star(verts[0], ())
    for c in verts:
        if _deg(g, c, comp) == k - 1 and all(_deg(g, v, comp) == 1 for v in verts if v != c):
            return Star(c, tuple(v for v in verts if v != c))
    return None


def _match_star_triangle(g: Graph, comp: int) -> StarTriangle | None:
    verts = list(bits(comp))
    k = len(verts)
    if k < 3 or k % 2 == 0:
        return None
    for c in verts:
        if _deg(g, c, comp) != k - 1:
            continue
        triangles = []
        ok = True
        for u in verts:
            if u == c:
                continue
            if _deg(g, u, comp) != 2:
                ok = False
                break
            (w,) = bits(g.adj[u] & ~(1 << c))
            if u < w:
                triangles.append((u, w))
        if ok:
            return StarTriangle(c, tuple(triangles))
    return None


def _match_leaf_bipartite(g: Graph, comp: int) -> LeafBipartite | str:
    adj = g.adj
    verts = list(bits(comp))
    deg = {v: _deg(g, v, comp) for v in verts}
    triangles: dict[int, list[tuple[int, int]]] = {}
    outer = 0
    for u in verts:
        if deg[u] != 2:
            continue
        n1, n2 = bits(adj[u])
        for w, y in ((n1, n2), (n2, n1)):
            if u < w and deg[w] == 2 and adj[w] >> y & 1:
                triangles.setdefault(y, []).append((u, w))
                outer |= 1 << u | 1 << w
    rest = comp & ~outer
    leaf_mask = 0
    a_mask = 0
    for v in bits(rest):
        if deg[v] == 1:
            leaf_mask |= 1 << v
            a_mask |= adj[v]
    if a_mask & leaf_mask:
        return "a leaf is adjacent to another leaf"
    core = rest & ~leaf_mask
    b_mask = core & ~a_mask
    if not a_mask:
        return "no vertex carries a pendant leaf"
    for y in triangles:
        if not b_mask >> y & 1:
            return f"pendant triangle at vertex {y}, which also carries a leaf"
    for v in bits(a_mask):
        if adj[v] & a_mask:
            return f"edge inside the leaf-carrying side at vertex {v}"
    for v in bits(b_mask):
        if adj[v] & b_mask:
            return f"edge inside the leafless side at vertex {v}"
    if len(component_masks(g, core)) != 1:
        return "bipartite core is disconnected"
    leaves = {x: tuple(bits(adj[x] & leaf_mask)) for x in bits(a_mask)}
    return LeafBipartite(
        a=tuple(bits(a_mask)),
        b=tuple(bits(b_mask)),
        leaves=leaves,
        triangles={y: tuple(ts) for y, ts in sorted(triangles.items())},
    )


def _not_cw(g: Graph, comp: int, reason: str) -> NotCW:
    sub, vmap = subgraph_from_mask(g, comp)
    back = {i: v for v, i in vmap.items()}
    _, m = matching_number(sub)
    _, im = induced_matching_number(sub)
    relabel = lambda es: tuple(tuple(sorted((back[u], back[v]))) for u, v in es)  # noqa: E731
    return NotCW(reason, relabel(m), relabel(im))


def classify_component(g: Graph, comp: int) -> Shape:
    shape = _match_star(g, comp) or _match_star_triangle(g, comp)
    if shape is None:
        found = _match_leaf_bipartite(g, comp)
        if isinstance(found, str):
            return _not_cw(g, comp, found)
        shape = found
    shape.validate(g)
    assert shape.vertices() == set(bits(comp))
    return shape


def classify_structure(g: Graph) -> CWCertificate:
    """Per-component structural certificate; shapes are tried in fixed order."""
    return CWCertificate(
        tuple(
            ComponentVerdict(i, tuple(bits(c)), classify_component(g, c))
            for i, c in enumerate(component_masks(g))
        )
    )


@dataclass(frozen=True)
class CWVerdict:
    nu: int
    nu0: int

    @property
    def equal(self) -> bool:
        return self.nu == self.nu0


def is_cw_definitional(g: Graph, bundle: InvariantBundle | None = None) -> CWVerdict:
    if bundle is not None:
        return CWVerdict(bundle.nu, bundle.nu0)
    return CWVerdict(matching_number(g)[0], induced_matching_number(g)[0])


@dataclass(frozen=True)
class CWBipartiteVerdict:
    value: bool
    reason: str

    def __bool__(self) -> bool:
        return self.value


def is_cw_bipartite(
    g: Graph,
    bundle: InvariantBundle | None = None,
    certificate: CWCertificate | None = None,
) -> CWBipartiteVerdict:
    """Cameron-Walker and bipartite, decided by two routes that must agree.

    Route one: two-colourable and ``nu_0 == nu``. Route two: every component
    certificate is a star or a leaf-decorated bipartite core without pendant
    triangles. Disagreement raises :class:`ConsistencyFault`.
    """
    bip = is_bipartite(g) is not None
    d = is_cw_definitional(g, bundle)
    by_definition = bip and d.equal
    cert = classify_structure(g) if certificate is None else certificate
    by_structure = cert.is_cw_bipartite
    if by_definition != by_structure:
        raise ConsistencyFault(
            f"definitional route says {by_definition} (bipartite={bip}, nu={d.nu}, nu0={d.nu0}) "
            f"but structural route says {by_structure}: {cert.as_dict()}"
        )
    if by_definition:
        reason = "bipartite with nu0 == nu"
    elif not bip:
        reason = "not bipartite"
    else:
        reason = f"nu0 = {d.nu0} < nu = {d.nu}"
    return CWBipartiteVerdict(by_definition, reason)
