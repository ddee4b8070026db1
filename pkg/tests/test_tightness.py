"""Tightness: the direct injectivity test and the incremental subset scan."""

from __future__ import annotations

from itertools import combinations

import pytest

from walkup import (
    homology_map_injective,
    is_tight_z2,
    is_two_neighborly,
    random_stacked_sphere,
    standard_sphere,
)
from walkup.errors import SubsetSpaceTooLarge, UnknownVertex
from walkup.tightness import TightnessEngine


def test_full_subset_always_injective(torus_7):
    for k in range(3):
        assert homology_map_injective(torus_7, torus_7.vertices, k)


def test_single_facet_injective(m4_15):
    f = m4_15.facets[0]
    for k in range(5):
        assert homology_map_injective(m4_15, f, k)


def test_nonadjacent_pair_breaks_degree_zero():
    X = random_stacked_sphere(4, 8, seed=1)
    assert not is_two_neighborly(X)
    adj = X.adjacency()
    u, v = next(
        (u, v)
        for u, v in combinations(X.vertices, 2)
        if v not in adj[u]
    )
    assert not homology_map_injective(X, (u, v), 0)
    assert homology_map_injective(X, (u, v), 1)


def test_unknown_vertex_rejected(m4_15):
    with pytest.raises(UnknownVertex):
        homology_map_injective(m4_15, ("zz",), 0)


def test_scan_agrees_with_direct_check_exhaustively():
    # the fast incremental scan and the direct rank computation must give
    # identical verdicts on every subset and degree of small complexes
    complexes = [
        standard_sphere(2),
        random_stacked_sphere(2, 7, seed=0),
        random_stacked_sphere(3, 7, seed=5),
        random_stacked_sphere(4, 8, seed=1),
    ]
    for X in complexes:
        engine = TightnessEngine(X)
        n = len(X.vertices)
        scan_violations = set()
        _, viols = engine.scan(stop_on_first=False)
        for s, k in viols:
            scan_violations.add((s, k))
        direct_violations = set()
        for size in range(1, n):
            for sub in combinations(X.vertices, size):
                for k in range(X.dimension):
                    if not homology_map_injective(X, sub, k):
                        direct_violations.add((sub, k))
        assert scan_violations == direct_violations


def test_standard_spheres_tight():
    for d in (2, 3, 4):
        rep = is_tight_z2(standard_sphere(d))
        assert rep.verdict == "tight"
        assert rep.checked == 2 ** (d + 2) - 2


def test_eight_vertex_stacked_sphere_not_tight():
    X = random_stacked_sphere(4, 8, seed=1)
    rep = is_tight_z2(X, stop_on_first=True)
    assert rep.verdict == "not-tight"
    assert rep.violations
    # a 2-element witness exists among the violations when collecting all
    rep_all = is_tight_z2(X, stop_on_first=False)
    assert any(len(s) == 2 and k == 0 for s, k in rep_all.violations)


def test_tight_complexes_are_two_neighborly(m4_15):
    # degree-0 injectivity for every pair forces the edges
    assert is_two_neighborly(m4_15)
    for u, v in [("a1", "b4"), ("c2", "c3")]:
        assert homology_map_injective(m4_15, (u, v), 0)


def test_sampled_mode_consistent_with_exhaustive():
    X = random_stacked_sphere(4, 8, seed=1)
    exhaustive = is_tight_z2(X, stop_on_first=False)
    bad = {(s, k) for s, k in exhaustive.violations}
    sampled = is_tight_z2(X, mode="sampled", sample_count=200, seed=11,
                          stop_on_first=False)
    assert sampled.checked == 200
    for s, k in sampled.violations:
        assert (s, k) in bad
    assert sampled.verdict == "not-tight"


def test_sampled_mode_on_tight_complex():
    X = standard_sphere(3)
    rep = is_tight_z2(X, mode="sampled", sample_count=50, seed=4)
    assert rep.verdict == "tight-on-sample"
    assert rep.seed == 4 and rep.sample_count == 50


def test_parallel_scan_matches_sequential():
    X = random_stacked_sphere(4, 9, seed=3)
    seq = is_tight_z2(X, jobs=1, stop_on_first=False)
    par = is_tight_z2(X, jobs=2, stop_on_first=False)
    assert seq.checked == par.checked == 2 ** 9 - 2
    assert set(seq.violations) == set(par.violations)


def test_ceiling_guard():
    X = random_stacked_sphere(3, 25, seed=0)
    with pytest.raises(SubsetSpaceTooLarge):
        is_tight_z2(X, ceiling=20)
    rep = is_tight_z2(X, mode="sampled", sample_count=20, seed=0)
    assert rep.checked <= 20


def test_engine_counts_match_report(m4_15):
    engine = TightnessEngine(m4_15)
    checked, violations = engine.scan(stop_on_first=True)
    assert checked == 2 ** 15 - 2
    assert violations == []
