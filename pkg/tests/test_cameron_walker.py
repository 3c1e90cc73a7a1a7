import json

import pytest

from conftest import catalog, random_graphs
from misx.cameron_walker import (
    LeafBipartite,
    NotCW,
    Star,
    StarTriangle,
    classify_structure,
    is_cw_bipartite,
    is_cw_definitional,
)
from misx.generators import complete, cw_bipartite, cycle, path, star, star_triangle
from misx.graph import disjoint_union, empty_graph, from_edge_list
from misx.invariants import is_induced_matching, is_matching
from oracles import brute_nu, brute_nu0


@pytest.mark.parametrize("m", range(0, 6))
def test_star_definitional(m):
    v = is_cw_definitional(star(m))
    assert v.equal and v.nu == v.nu0 == min(1, m)


def test_path4_not_cw():
    v = is_cw_definitional(path(4))
    assert (v.nu, v.nu0, v.equal) == (2, 1, False) == (brute_nu(path(4)), brute_nu0(path(4)), False)


def test_figure1(fig1):
    assert is_cw_definitional(fig1).equal
    (comp,) = classify_structure(fig1).components
    shape = comp.shape
    assert isinstance(shape, LeafBipartite)
    # paper labels 3,4 -> indices 2,3; leaves {7,8} on 3 and {5,6} on 4
    assert shape.a == (2, 3)
    assert shape.leaves == {2: (6, 7), 3: (4, 5)}
    assert shape.b == (0, 1)
    assert shape.pendant_triangle_count == 0
    assert is_cw_bipartite(fig1).value


def test_star_triangle_certificate():
    (comp,) = classify_structure(star_triangle(3)).components
    assert isinstance(comp.shape, StarTriangle)
    assert comp.shape.center == 0 and len(comp.shape.triangles) == 3


def test_triangle_is_star_triangle():
    (comp,) = classify_structure(complete(3)).components
    assert comp.shape == StarTriangle(0, ((1, 2),))


def test_small_stars_resolve_to_star():
    assert classify_structure(empty_graph(1)).components[0].shape == Star(0, ())
    assert classify_structure(complete(2)).components[0].shape == Star(0, (1,))
    assert classify_structure(star(3)).components[0].shape == Star(0, (1, 2, 3))


def test_c4_not_cw():
    (comp,) = classify_structure(cycle(4)).components
    assert isinstance(comp.shape, NotCW)
    w = comp.shape
    assert len(w.matching) == 2 and len(w.induced_matching) == 1
    g = cycle(4)
    assert is_matching(g, w.matching) and is_induced_matching(g, w.induced_matching)


def test_pendant_triangles_on_b_side():
    # core a0-b0, leaf on a0, one pendant triangle on b0
    g = from_edge_list(5, [(0, 1), (0, 2), (1, 3), (1, 4), (3, 4)])
    (comp,) = classify_structure(g).components
    assert isinstance(comp.shape, LeafBipartite)
    assert comp.shape.triangles == {1: ((3, 4),)}
    assert is_cw_definitional(g).equal
    assert not is_cw_bipartite(g).value


def test_triangle_on_leaf_side_rejected():
    g = from_edge_list(4, [(0, 1), (0, 2), (0, 3), (2, 3)])
    assert not is_cw_definitional(g).equal
    assert isinstance(classify_structure(g).components[0].shape, NotCW)


@pytest.mark.parametrize(
    "g, expected",
    [(empty_graph(4), True), (empty_graph(0), True), (star_triangle(2), False), (cycle(4), False)],
)
def test_cw_bipartite_examples(g, expected):
    v = is_cw_bipartite(g)
    assert v.value is expected and bool(v) is expected


def test_disconnected_all_components_must_be_cw():
    g = disjoint_union([star(2), path(4)])
    cert = classify_structure(g)
    assert [c.is_cw for c in cert.components] == [True, False]
    assert not cert.is_cw and not is_cw_definitional(g).equal


@pytest.mark.parametrize("n", range(7))
def test_agreement_exhaustive(n):
    for g in catalog(n):
        cert = classify_structure(g)
        assert cert.is_cw == is_cw_definitional(g).equal
        is_cw_bipartite(g, certificate=cert)


def test_agreement_random():
    for g in random_graphs(300, (7, 8, 9), seed=21):
        assert classify_structure(g).is_cw == is_cw_definitional(g).equal


@pytest.mark.parametrize("seed", range(40))
def test_generated_cw_bipartite_both_routes(seed):
    g = cw_bipartite(1 + seed % 4, 1 + seed % 3, leaves=1 + seed % 2, p=(seed % 5) / 4, seed=seed)
    assert classify_structure(g).is_cw_bipartite
    assert is_cw_definitional(g).equal
    assert is_cw_bipartite(g).value


def test_certificates_revalidate_and_serialize(fig1):
    for g in [fig1, star_triangle(2), cycle(5), disjoint_union([star(3), complete(3)])]:
        cert = classify_structure(g)
        for comp in cert.components:
            if not isinstance(comp.shape, NotCW):
                comp.shape.validate(g)
        payload = json.loads(json.dumps(cert.as_dict()))
        assert payload["cameron_walker"] == cert.is_cw
        assert [c["index"] for c in payload["components"]] == list(range(len(cert.components)))
        assert all(c["shape"] in {"star", "star_triangle", "leaf_bipartite", "not_cw"} for c in payload["components"])
