from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from conftest import maps
from mapoly import fixtures
from mapoly.errors import InternalError, MapError, MapFormatError
from mapoly.maps import (EMPTY_MAP, HalfEdge, Map, build_map, classify, components, contract,
                         delete, disjoint_union, dual, faces, flip_edges, format_map, parameters,
                         parse_map, read_map, restrict)

EDGE = fixtures.edge()
LOOP0 = fixtures.loop0()
VERTEX = fixtures.vertex()
B0 = fixtures.bouquet_plane()
B1 = fixtures.bouquet(1)


def h(token: str) -> HalfEdge:
    return HalfEdge.parse(token)


def test_build_map_examples():
    loop = build_map([[h("1+"), h("1-")]])
    assert (loop.num_vertices, loop.num_edges) == (1, 1)
    edge = build_map([[h("1+")], [h("1-")]])
    assert edge.num_vertices == 2 and edge.endpoints(1) == (0, 1)
    b1 = build_map([[h("1+"), h("2+"), h("1-"), h("2-")]])
    assert b1 == B1


@pytest.mark.parametrize("rotations", [
    [["1+", "1+", "1-"]],
    [["1+"]],
    [["1+", "1-", "1-"]],
    [["1+", "2-"], ["2+"]],
])
def test_build_map_rejects_bad_rotations(rotations):
    with pytest.raises(MapError):
        build_map([[h(t) for t in rot] for rot in rotations])


def test_isolated_vertex_is_legal():
    m = build_map([[]])
    assert m.parameters().as_dict()["f"] == 1
    assert m.parameters().k == 1


def test_faces_examples():
    assert len(faces(EDGE)) == 1 and sorted(faces(EDGE)[0]) == [h("1+"), h("1-")]
    assert len(faces(B0)) == 3
    assert [len(w) for w in faces(B1)] == [4]


def test_parameters_examples():
    p = parameters(EDGE)
    assert (p.v, p.e, p.f, p.k, p.g) == (2, 1, 1, 1, 0)
    p = parameters(B1)
    assert (p.v, p.e, p.f, p.k, p.g) == (1, 2, 1, 1, 1)
    p = parameters(B0)
    assert (p.v, p.e, p.f, p.k, p.g) == (1, 2, 3, 1, 0)
    assert str(parameters(EDGE)) == "v=2 e=1 f=1 k=1 g=0 r=1 n=0 r*=0 n*=1"


def test_dual_examples():
    assert dual(EDGE).is_isomorphic(LOOP0)
    assert dual(B1).is_isomorphic(B1)
    assert dual(dual(B0)).is_isomorphic(B0)


def test_delete_examples():
    assert delete(B1, {1}).is_isomorphic(LOOP0)
    assert delete(B1, {1}).parameters().g == 0
    assert delete(B1, set()) == B1
    split = delete(fixtures.m1(), {5})
    assert split.parameters().k == 2
    with pytest.raises(MapError):
        delete(B1, {7})


def test_contract_examples():
    assert contract(B1, {1}).is_isomorphic(EDGE)
    # the plane loop splits its vertex in two; the surviving edge is still a loop
    split = contract(B0, {1})
    assert split.is_isomorphic(disjoint_union(VERTEX, LOOP0))
    assert split.num_vertices == 2 and split.parameters().k == 2
    single = contract(EDGE, {1})
    assert single.num_vertices == 1 and single.num_edges == 0
    with pytest.raises(MapError):
        contract(EDGE, {2})


def test_disjoint_union_examples():
    p = disjoint_union(EDGE, LOOP0).parameters()
    assert (p.v, p.e, p.f, p.k, p.g) == (3, 2, 3, 2, 0)  # a plane loop has two faces
    p = disjoint_union(B1, B1).parameters()
    assert (p.g, p.k) == (2, 2)
    assert disjoint_union(B1, EMPTY_MAP) == B1


def test_components_examples():
    parts = components(disjoint_union(EDGE, B1))
    assert len(parts) == 2
    assert parts[0].is_isomorphic(EDGE) and parts[1].is_isomorphic(B1)
    assert components(B1) == [B1]
    assert components(EMPTY_MAP) == []


def test_classify_examples():
    assert classify(B1).__dict__ == {"is_quasi_tree": True, "is_bouquet": True, "is_plane": False}
    assert classify(EDGE).__dict__ == {"is_quasi_tree": True, "is_bouquet": False, "is_plane": True}
    assert classify(B0).__dict__ == {"is_quasi_tree": False, "is_bouquet": True, "is_plane": True}


def test_k4_embeddings():
    assert sorted(len(w) for w in fixtures.k4_plane().faces()) == [3, 3, 3, 3]
    assert sorted(len(w) for w in fixtures.k4_torus().faces()) == [4, 8]
    assert fixtures.k4_torus().parameters().g == 1


def test_bouquet_genus():
    for g in range(4):
        p = fixtures.bouquet(g).parameters()
        assert (p.v, p.f, p.g) == (1, 1, g)


def test_corrupted_rotation_detected():
    m = fixtures.bouquet(1)
    m._faces = ((h("1+"),), (h("2+"),), (h("1-"),), (h("2-"),))  # four faces break Euler
    with pytest.raises(InternalError):
        m.parameters()


# -- text format -------------------------------------------------------------

def test_parse_format_round_trip():
    text = "# comment\nvertex: 1+ 2+ 1- 2-\n\nvertex: 3+\nvertex: 3-\nvertex:\n"
    m = parse_map(text)
    assert m.num_vertices == 4 and m.num_edges == 3
    assert parse_map(format_map(m)) == m


@pytest.mark.parametrize("text, line, column", [
    ("vertex: 1+ 1-\nvertx: 2+ 2-\n", 2, 1),
    ("vertex: 1+ 1*\n", 1, 12),
    ("vertex: 1+ 1- 1+\n", 1, 15),
])
def test_parse_errors_carry_position(text, line, column):
    with pytest.raises(MapFormatError) as info:
        parse_map(text)
    assert (info.value.line, info.value.column) == (line, column)
    assert str(info.value).startswith(f"line {line}, column {column}:")


def test_shipped_fixture_files(data_dir):
    named = fixtures.named_fixtures()
    for name, m in named.items():
        assert read_map(data_dir / f"{name}.map") == m


# -- properties --------------------------------------------------------------

@given(maps(max_edges=7), st.data())
def test_euler_relation_on_minors(m, data):
    subset = data.draw(st.sets(st.sampled_from(m.edges)) if m.edges else st.just(set()))
    for minor in (m, delete(m, subset), contract(m, subset)):
        p = minor.parameters()
        assert p.chi == 2 * p.k - 2 * p.g
        assert p.n_star == p.r + 2 * p.g


@given(maps(max_edges=7), st.data())
def test_genus_inequality_and_equality_condition(m, data):
    a = data.draw(st.sets(st.sampled_from(m.edges)) if m.edges else st.just(set()))
    pm = m.parameters()
    res = restrict(m, a).parameters()
    con = contract(m, a).parameters()
    assert res.g + con.g <= pm.g
    condition = (res.k - pm.k - res.f + con.k == 0) and (con.k - pm.k - con.v + res.k == 0)
    assert (res.g + con.g == pm.g) == condition


@given(maps(max_edges=7))
def test_dual_involution(m):
    d = dual(m)
    assert dual(d).is_isomorphic(m)
    pm, pd = m.parameters(), d.parameters()
    assert pd.g == pm.g and pd.f == pm.v and pd.v == pm.f
    assert pd.r == pm.r_star and pd.n == pm.n_star


@given(maps(max_edges=6, min_edges=2), st.data())
def test_delete_contract_commute(m, data):
    e, f = data.draw(st.lists(st.sampled_from(m.edges), min_size=2, max_size=2, unique=True))
    assert contract(delete(m, {e}), {f}).is_isomorphic(delete(contract(m, {f}), {e}))


@given(maps(max_edges=6, min_edges=1), st.data())
def test_delete_and_contract_vertex_counts(m, data):
    e = data.draw(st.sampled_from(m.edges))
    assert delete(m, {e}).num_vertices == m.num_vertices
    assert delete(m, {e}).parameters().g <= m.parameters().g
    assert contract(m, {e}).parameters().g <= m.parameters().g
    if not m.is_loop(e):
        c = contract(m, {e}).parameters()
        assert c.v == m.num_vertices - 1 and c.k == m.parameters().k


@given(maps(max_edges=5), maps(max_edges=5))
def test_disjoint_union_additive(m1, m2):
    u = disjoint_union(m1, m2)
    assert u.parameters() == m1.parameters() + m2.parameters()
    assert sum((c.parameters() for c in components(u)), EMPTY_MAP.parameters()) == u.parameters()


@given(maps(max_edges=6), st.data())
def test_isomorphism_invariant_under_relabeling(m, data):
    perm = data.draw(st.permutations(m.edges)) if m.edges else []
    relabeled = Map([[HalfEdge(perm[m.edges.index(x.edge)], x.end) for x in rot]
                     for rot in reversed(m.rotations)])
    assert relabeled.is_isomorphic(m)
    assert relabeled.parameters() == m.parameters()


@given(maps(max_edges=6, min_edges=1), st.data())
def test_flip_changes_map_but_not_parameters(m, data):
    e = data.draw(st.sampled_from(m.edges))
    flipped = flip_edges(m, {e})
    assert flipped.parameters() == m.parameters()
    assert flip_edges(flipped, {e}) == m
