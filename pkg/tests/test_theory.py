"""Closed-form face vectors, lower bounds, class membership."""

from __future__ import annotations

from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from walkup import (
    SimplicialComplex,
    check_bounds_4manifold,
    dehn_sommerville_4,
    fvector_from_f0_f1,
    in_walkup_class,
    is_two_neighborly,
    random_stacked_sphere,
    standard_sphere,
    stacked_sphere_fvector,
    walkup_fvector_even,
)
from walkup.errors import (
    InvalidParameters,
    NonIntegralResult,
    NotClosedConnected4Manifold,
    OddDimension,
)

from conftest import cyclic_polytope_boundary


# ------------------------------------------------------------ stacked formula

def test_stacked_fvector_d4_f30():
    assert stacked_sphere_fvector(4, 30) == (30, 135, 260, 255, 102)


def test_stacked_fvector_collapses_to_simplex():
    for d in (1, 2, 3, 4, 5):
        assert stacked_sphere_fvector(d, d + 2) == tuple(
            comb(d + 2, j + 1) for j in range(d + 1)
        )


def test_stacked_fvector_d3_f10():
    assert stacked_sphere_fvector(3, 10) == (10, 30, 40, 20)
    # cross-check against a generated instance
    X = random_stacked_sphere(3, 10, seed=123)
    assert X.f_vector() == (10, 30, 40, 20)


def test_stacked_fvector_domain():
    with pytest.raises(InvalidParameters):
        stacked_sphere_fvector(0, 5)
    with pytest.raises(InvalidParameters):
        stacked_sphere_fvector(3, 4)


# ----------------------------------------------------------- even-d formula

def test_walkup_fvector_m4_15():
    assert walkup_fvector_even(4, 15, -4) == (15, 105, 230, 240, 96)


def test_walkup_fvector_chi2_is_stacked():
    for n in (6, 10, 20, 30):
        assert walkup_fvector_even(4, n, 2) == stacked_sphere_fvector(4, n)


def test_walkup_fvector_11_vertex():
    assert walkup_fvector_even(4, 11, 0) == (11, 55, 110, 110, 44)


def test_walkup_fvector_odd_dimension_rejected():
    with pytest.raises(OddDimension):
        walkup_fvector_even(3, 10, 0)


def test_walkup_fvector_non_integral():
    with pytest.raises(NonIntegralResult):
        walkup_fvector_even(4, 10, 1)  # 15 chi / 2 not integral for odd chi


# ----------------------------------------------------------------- from f0,f1

def test_fvector_from_f0_f1_m4_15():
    assert fvector_from_f0_f1(4, 15, 105) == (15, 105, 230, 240, 96)


def test_fvector_from_f0_f1_d3():
    f = fvector_from_f0_f1(3, 10, 30)
    assert f == (10, 30, 2 * (30 - 10), 30 - 10)
    # Euler characteristic 0 holds identically in odd dimension 3
    assert f[0] - f[1] + f[2] - f[3] == 0


def test_fvector_from_f0_f1_matches_even_formula():
    for n, chi in ((15, -4), (11, 0), (20, 2)):
        f1 = 5 * n - 15 * chi // 2
        assert fvector_from_f0_f1(4, n, f1) == walkup_fvector_even(4, n, chi)


@settings(max_examples=15, deadline=None)
@given(seed=st.integers(min_value=0, max_value=2**32), d=st.sampled_from([2, 3, 4]))
def test_fvector_from_f0_f1_on_generated(seed, d):
    X = random_stacked_sphere(d, d + 5, seed=seed)
    f = X.f_vector()
    assert fvector_from_f0_f1(d, f[0], f[1]) == f


@settings(max_examples=10, deadline=None)
@given(seed=st.integers(min_value=0, max_value=2**32), d=st.sampled_from([2, 4]))
def test_even_dim_members_match_closed_form(seed, d):
    # connected even-dimensional class members: f determined by f0 and chi
    from walkup import homology_profile

    X = random_stacked_sphere(d, d + 5, seed=seed)
    chi = homology_profile(X).euler
    assert X.f_vector() == walkup_fvector_even(d, len(X.vertices), chi)


def test_even_dim_closed_form_on_m4_15(m4_15):
    from walkup import homology_profile

    chi = homology_profile(m4_15).euler
    assert m4_15.f_vector() == walkup_fvector_even(4, 15, chi)


# ------------------------------------------------------------ dehn-sommerville

def test_dehn_sommerville_examples():
    assert dehn_sommerville_4(15, 105, -4) == (15, 105, 230, 240, 96)
    assert dehn_sommerville_4(6, 15, 2) == (6, 15, 20, 15, 6)


def test_dehn_sommerville_on_corpus(m4_15, s4_30):
    for X in (m4_15, s4_30, standard_sphere(4)):
        f = X.f_vector()
        chi = f[0] - f[1] + f[2] - f[3] + f[4]
        assert dehn_sommerville_4(f[0], f[1], chi) == f


# --------------------------------------------------------------- class member

def test_m4_15_in_walkup_class(m4_15):
    assert in_walkup_class(m4_15)


def test_standard_spheres_in_walkup_class():
    for d in (2, 3, 4, 5):
        assert in_walkup_class(standard_sphere(d))


def test_torus_in_walkup_class(torus_7):
    # dimension 2: the class is all closed 2-manifolds
    assert in_walkup_class(torus_7)


def test_suspension_of_nonstacked_sphere_not_in_class():
    C = cyclic_polytope_boundary(4, 7)
    facets = [f + ("north",) for f in C.facets] + [f + ("south",) for f in C.facets]
    X = SimplicialComplex(tuple(tuple(sorted(f)) for f in facets))
    assert X.dimension == 4
    assert X.is_closed_pseudomanifold()
    assert not in_walkup_class(X)


def test_open_complex_not_in_class():
    X = SimplicialComplex((("a", "b", "c"),))
    assert not in_walkup_class(X)


# -------------------------------------------------------------------- bounds

def test_bounds_m4_15(m4_15):
    rep = check_bounds_4manifold(m4_15)
    assert rep.euler == -4
    assert rep.edge_bound.lhs == 210 and rep.edge_bound.rhs == 210
    assert rep.vertex_bound.lhs == 60 and rep.vertex_bound.rhs == 60
    assert rep.edge_bound.tight and rep.vertex_bound.tight
    assert rep.overall_equality and rep.two_neighborly


def test_bounds_standard_sphere():
    rep = check_bounds_4manifold(standard_sphere(4))
    assert rep.vertex_bound.lhs == -30 and rep.vertex_bound.rhs == -30
    assert rep.vertex_bound.tight
    assert rep.edge_bound.tight  # stacked spheres sit in the class


def test_bounds_16_vertex_stacked_sphere():
    X = random_stacked_sphere(4, 16, seed=5)
    rep = check_bounds_4manifold(X)
    assert rep.edge_bound.tight
    assert rep.vertex_bound.holds and not rep.vertex_bound.tight


def test_bounds_rejects_wrong_inputs(torus_7):
    with pytest.raises(NotClosedConnected4Manifold):
        check_bounds_4manifold(torus_7)
    with pytest.raises(NotClosedConnected4Manifold):
        check_bounds_4manifold(SimplicialComplex((("a", "b", "c", "d", "e"),)))


def test_edge_bound_tight_implies_walkup_on_corpus():
    for seed in (1, 2):
        X = random_stacked_sphere(4, 12, seed=seed)
        rep = check_bounds_4manifold(X)
        if rep.edge_bound.tight:
            assert in_walkup_class(X)


# ------------------------------------------------------------- 2-neighborly

def test_two_neighborly_m4_15(m4_15):
    assert is_two_neighborly(m4_15)
    assert m4_15.f_vector()[1] == comb(15, 2)


def test_two_neighborly_standard_spheres():
    for d in (1, 2, 3, 4):
        assert is_two_neighborly(standard_sphere(d))


def test_stacked_spheres_beyond_simplex_not_neighborly():
    # f1 = 5 f0 - 15 < C(f0, 2) once f0 > 6; the f0 = 7 case reads 20 < 21
    assert stacked_sphere_fvector(4, 7)[1] == 20 < comb(7, 2)
    for seed in (0, 1):
        X = random_stacked_sphere(4, 7, seed=seed)
        assert not is_two_neighborly(X)


def test_corollary_equality_iff_two_neighborly(m4_15):
    # on even-dimensional class members: vertex bound tight <-> 2-neighborly
    rep = check_bounds_4manifold(m4_15)
    assert rep.vertex_bound.tight == is_two_neighborly(m4_15)
    for seed in (3, 4):
        X = random_stacked_sphere(4, 10, seed=seed)
        rep = check_bounds_4manifold(X)
        assert rep.vertex_bound.tight == is_two_neighborly(X)
    S = standard_sphere(4)
    assert check_bounds_4manifold(S).vertex_bound.tight == is_two_neighborly(S)
