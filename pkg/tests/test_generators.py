import pytest

from conftest import FIGURE1_EDGES
from misx.cameron_walker import classify_structure, is_cw_bipartite
from misx.generators import (
    FamilySpec,
    complete,
    complete_bipartite,
    cw_bipartite,
    cycle,
    edge_order,
    enumerate_labeled_graphs,
    expand_family,
    generate,
    parse_family,
    path,
    star,
    star_triangle,
    triangles_plus_isolated,
)
from misx.graph import GraphInputError, connected_components, from_edge_list
from oracles import isomorphic


def test_star_triangle_one_is_triangle():
    assert star_triangle(1) == complete(3)


def test_triangles_plus_isolated():
    g = triangles_plus_isolated(2, 1)
    assert g.n == 7 and g.edge_count == 6
    assert [h.n for h, _ in connected_components(g)] == [3, 3, 1]


def test_cw_bipartite_complete_core_is_figure1():
    g = cw_bipartite(2, 2, leaves=2, p=1.0, seed=0)
    assert g.n == 8
    assert isomorphic(g, from_edge_list(8, FIGURE1_EDGES))


def test_basic_families():
    assert star(4).edges() == [(0, 1), (0, 2), (0, 3), (0, 4)]
    assert complete_bipartite(2, 3).edge_count == 6
    assert path(1).edge_count == 0 and path(0).n == 0
    assert cycle(3) == complete(3)
    assert star(0).n == 1


@pytest.mark.parametrize(
    "call",
    [lambda: star_triangle(0), lambda: cycle(2), lambda: path(-1), lambda: cw_bipartite(0, 1, seed=1),
     lambda: cw_bipartite(2, 0, seed=1), lambda: cw_bipartite(1, 1, leaves=0, seed=1),
     lambda: cw_bipartite(1, 1, p=2.0, seed=1)],
)
def test_invalid_parameters(call):
    with pytest.raises(GraphInputError):
        call()


@pytest.mark.parametrize("seed", range(25))
def test_cw_bipartite_random_is_cw_bipartite(seed):
    import random

    rng = random.Random(seed)
    a, b = rng.randint(1, 4), rng.randint(1, 4)
    g = cw_bipartite(a, b, leaves=rng.randint(1, 2), p=rng.random(), seed=seed)
    assert is_cw_bipartite(g).value
    comps = classify_structure(g).components
    assert len(comps) == 1
    assert comps[0].shape.shape in ("leaf_bipartite", "star")


def test_cw_bipartite_deterministic():
    assert cw_bipartite(3, 4, leaves=2, p=0.3, seed=7) == cw_bipartite(3, 4, leaves=2, p=0.3, seed=7)
    assert generate("cw-bipartite:a=2,b=2,leaves=2,seed=1") == generate("cw-bipartite:a=2,b=2,leaves=2,seed=1")


def test_family_spec_parsing():
    assert parse_family("star:m=4") == [FamilySpec("star", {"m": 4})]
    assert generate("triangles:s=1,t=0") == complete(3)
    assert generate("triangles:s=1") == complete(3)
    g = generate("star:m=2+triangles:s=1,t=1")
    assert g.n == 7 and len(connected_components(g)) == 3
    assert generate("star_triangle:k=2") == star_triangle(2)


@pytest.mark.parametrize("spec", ["nope:x=1", "star", "star:q=1", "star:m=x", "star:m", "cw-bipartite:a=1,b=1"])
def test_family_spec_errors(spec):
    with pytest.raises(GraphInputError):
        generate(spec)


def test_expand_ranges():
    items = list(expand_family("triangles:s=0..2,t=0..1"))
    assert len(items) == 6
    assert items[0][0] == "triangles:s=0,t=0"
    assert items[-1][1] == triangles_plus_isolated(2, 1)


def test_edge_order_is_column_major():
    assert edge_order(4) == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]


@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 2), (3, 8), (4, 64), (6, 32768)])
def test_labeled_counts(n, count):
    assert sum(1 for _ in enumerate_labeled_graphs(n)) == count


def test_labeled_graphs_distinct_and_ordered():
    gs = list(enumerate_labeled_graphs(4))
    assert len(set(gs)) == 64
    assert gs[0].edge_count == 0 and gs[-1] == complete(4)
    assert gs[1].edges() == [(0, 1)] and gs[2].edges() == [(0, 2)]


def test_labeled_limit():
    with pytest.raises(GraphInputError, match="refusing"):
        next(enumerate_labeled_graphs(7))
    assert sum(1 for _ in enumerate_labeled_graphs(3, limit=3)) == 8
