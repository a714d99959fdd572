from __future__ import annotations

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

import reference as ref
from conftest import maps
from mapoly import fixtures
from mapoly.errors import LimitExceededError
from mapoly.flows import (FLOW, MODES, TENSION, constraint_walks, count, count_via_surface_tutte,
                          is_valid_assignment, local_count_bruteforce, local_count_formula,
                          local_flow_count_formula, nowhere_identity_count_formula,
                          surface_group_hom_count, walk_product)
from mapoly.groups import (group_from_selector, make_cyclic, make_dihedral, make_quaternion8,
                           make_symmetric)
from mapoly.maps import dual, flip_edges
from mapoly.polynomials import parse_polynomial
from oracles import chromatic_polynomial_at, flow_polynomial_at, lagrange_at

EDGE = fixtures.edge()
B1 = fixtures.bouquet(1)
S3 = make_symmetric(3)
Q8 = make_quaternion8()
D8 = make_dihedral(8)
SMALL_GROUPS = [group_from_selector(s) for s in ("z2", "z3", "z4", "z2xz2", "s3", "d8", "q8")]


def three_ways(m, g, mode, nowhere=True):
    return (local_count_bruteforce(m, g, mode, nowhere),
            count(m, g, mode, nowhere, "formula"),
            count_via_surface_tutte(m, g, mode, nowhere))


def test_bruteforce_examples():
    assert local_count_bruteforce(B1, S3, FLOW) == 7
    for n in (2, 3, 4, 5):
        assert local_count_bruteforce(B1, make_cyclic(n), FLOW) == (n - 1) ** 2
    for g in SMALL_GROUPS:
        assert local_count_bruteforce(EDGE, g, FLOW) == 0


def test_formula_examples():
    assert local_flow_count_formula(B1, S3) == 18
    assert local_flow_count_formula(fixtures.bouquet(2), Q8) == 2176
    for g in SMALL_GROUPS:
        for name in ("k4_plane", "triangle", "b0"):
            m = fixtures.named_fixtures()[name]
            assert local_flow_count_formula(m, g) == g.order ** m.parameters().n


def test_nowhere_identity_examples():
    assert nowhere_identity_count_formula(B1, S3, FLOW) == 7
    assert nowhere_identity_count_formula(fixtures.triangle(), make_cyclic(3), TENSION) == 2


def test_tutte_evaluation_examples():
    b1 = parse_polynomial(ref.B1_SURFACE_TUTTE)
    point = {"x": 1, "y": -6, "x1": 1, "x0": 1, "y0": -1, "y1": Fraction(-1, 2)}
    assert -b1.evaluate(point) == 7
    assert count_via_surface_tutte(B1, S3, FLOW) == 7
    assert count_via_surface_tutte(EDGE, make_cyclic(5), TENSION) == 4


def test_hom_count_examples():
    assert surface_group_hom_count(1, S3) == 18
    assert surface_group_hom_count(2, Q8) == 2176
    assert surface_group_hom_count(0, make_symmetric(4)) == 1
    with pytest.raises(ValueError):
        surface_group_hom_count(-1, S3)


def test_budget_enforced():
    with pytest.raises(LimitExceededError) as info:
        local_count_bruteforce(fixtures.k4_plane(), S3, FLOW, budget=10)
    assert info.value.limit == "budget"
    with pytest.raises(LimitExceededError):
        surface_group_hom_count(3, make_symmetric(4), "bruteforce", budget=1000)


def test_bad_mode():
    with pytest.raises(ValueError):
        count(B1, S3, "current")


def test_starting_point_is_immaterial():
    # any valid assignment has identity products from every starting half-edge
    m = fixtures.theta_torus()
    for vals in product(range(S3.order), repeat=m.num_edges):
        values = dict(zip(m.edges, vals))
        if is_valid_assignment(m, S3, FLOW, values):
            for walk in constraint_walks(m, FLOW):
                assert all(walk_product(S3, walk, values, s) == 0 for s in range(len(walk)))


SMALL_FIXTURES = sorted(n for n, m in fixtures.named_fixtures().items() if m.num_edges <= 5)


@pytest.mark.parametrize("name", SMALL_FIXTURES)
def test_three_way_agreement_on_fixtures(name):
    m = fixtures.named_fixtures()[name]
    for g in SMALL_GROUPS:
        for mode in MODES:
            for nowhere in (True, False):
                assert len(set(three_ways(m, g, mode, nowhere))) == 1


def test_plane_collapse():
    z6, z8, z2z4 = make_cyclic(6), make_cyclic(8), group_from_selector("z2xz4")
    for name, m in fixtures.named_fixtures().items():
        if m.parameters().g or m.num_edges > 8:
            continue
        for mode in MODES:
            assert nowhere_identity_count_formula(m, S3, mode) == nowhere_identity_count_formula(m, z6, mode)
            counts = {nowhere_identity_count_formula(m, g, mode) for g in (D8, z8, z2z4)}
            assert len(counts) == 1


def test_d8_q8_coincide_on_fixtures():
    for m in fixtures.named_fixtures().values():
        for mode in MODES:
            assert nowhere_identity_count_formula(m, D8, mode) == nowhere_identity_count_formula(m, Q8, mode)


@pytest.mark.parametrize("name", ["b1", "b0", "theta_torus", "b2"])
def test_dihedral_quasi_polynomial(name):
    m = fixtures.named_fixtures()[name]

    def q(n):
        return nowhere_identity_count_formula(m, make_dihedral(2 * n), FLOW)

    # a polynomial of degree <= e(m) through e(m)+1 points of one parity
    # must predict the next point of that parity
    for start in (3, 4):
        xs = [start + 2 * i for i in range(m.num_edges + 1)]
        target = xs[-1] + 2
        assert lagrange_at(xs, [q(n) for n in xs], target) == q(target)


# -- properties --------------------------------------------------------------

@settings(max_examples=40)
@given(maps(max_edges=4), st.sampled_from(SMALL_GROUPS), st.sampled_from(MODES), st.booleans())
def test_three_way_agreement(m, g, mode, nowhere):
    assert len(set(three_ways(m, g, mode, nowhere))) == 1


@given(maps(max_edges=5), st.sampled_from(SMALL_GROUPS))
def test_tension_is_dual_flow(m, g):
    assert nowhere_identity_count_formula(m, g, TENSION) == nowhere_identity_count_formula(dual(m), g, FLOW)
    assert local_count_formula(m, g, TENSION) == local_count_formula(dual(m), g, FLOW)


@settings(max_examples=40)
@given(maps(max_edges=4, min_edges=1), st.sampled_from(SMALL_GROUPS), st.data())
def test_orientation_invariance(m, g, data):
    flipped = flip_edges(m, data.draw(st.sets(st.sampled_from(m.edges))))
    for mode in MODES:
        for nowhere in (True, False):
            assert local_count_bruteforce(flipped, g, mode, nowhere) == \
                local_count_bruteforce(m, g, mode, nowhere)


@given(maps(max_edges=6))
def test_abelian_collapse(m):
    z4, z2z2 = make_cyclic(4), group_from_selector("z2xz2")
    a = nowhere_identity_count_formula(m, z4, FLOW)
    assert a == nowhere_identity_count_formula(m, z2z2, FLOW)
    assert a == flow_polynomial_at(m, 4)
    if m.parameters().g == 0:
        # nowhere-zero tensions of a plane map are proper colourings up to a factor |G|^k
        colourings = chromatic_polynomial_at(m, 3)
        assert nowhere_identity_count_formula(m, make_cyclic(3), TENSION) * 3 ** m.parameters().k \
            == colourings


@given(maps(max_edges=6))
def test_d8_q8_coincide(m):
    for mode in MODES:
        assert nowhere_identity_count_formula(m, D8, mode) == nowhere_identity_count_formula(m, Q8, mode)
