"""Shared fixtures: the named complexes plus small test-corpus generators."""

from __future__ import annotations

from itertools import combinations

import pytest

from walkup import (
    SimplicialComplex,
    build_b5_30,
    build_m4_15,
    build_n5_15,
    build_s4_30,
    find_admissible_bijection,
    from_facets,
    standard_sphere,
)
from walkup.rng import SplitMix64
from walkup.stacked import ReductionStep, replay_reductions


@pytest.fixture(scope="session")
def b5_30():
    return build_b5_30()


@pytest.fixture(scope="session")
def s4_30():
    return build_s4_30()


@pytest.fixture(scope="session")
def m4_15():
    return build_m4_15()


@pytest.fixture(scope="session")
def n5_15():
    return build_n5_15()


@pytest.fixture(scope="session")
def rp2_6():
    """The 6-vertex real projective plane (non-orientable, chi = 1)."""
    return from_facets(
        f.split()
        for f in (
            "1 2 5", "1 2 6", "1 3 4", "1 3 6", "1 4 5",
            "2 3 5", "2 3 4", "2 4 6", "3 5 6", "4 5 6",
        )
    )


@pytest.fixture(scope="session")
def torus_7():
    """The 7-vertex torus (orientable, chi = 0, 2-neighborly)."""
    facets = []
    for i in range(7):
        facets.append([f"t{i}", f"t{(i + 1) % 7}", f"t{(i + 3) % 7}"])
        facets.append([f"t{i}", f"t{(i + 2) % 7}", f"t{(i + 3) % 7}"])
    return from_facets(facets)


def cyclic_polytope_boundary(dim: int, n: int) -> SimplicialComplex:
    """Boundary of the cyclic polytope C(dim, n) via Gale's evenness condition."""
    verts = list(range(1, n + 1))
    facets = []
    for s in combinations(verts, dim):
        sset = set(s)
        ok = True
        for i in verts:
            if i in sset:
                continue
            for j in verts:
                if j <= i or j in sset:
                    continue
                if sum(1 for k in s if i < k < j) % 2 == 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            facets.append([f"p{i}" for i in s])
    return from_facets(facets)


def tube_sphere(d: int, n: int, seed: int) -> SimplicialComplex:
    """Stacked d-sphere grown along a path: long tube, large graph diameter.

    Used where admissible handle pairs are needed; uniform growth keeps
    the skeleton too shallow for distance-3 pairs at small n.
    """
    rng = SplitMix64(seed)
    cur = standard_sphere(d)
    newest = None
    for step in range(n - (d + 2)):
        pool = (
            cur.facets
            if newest is None
            else tuple(f for f in cur.facets if newest in f)
        )
        chosen = pool[rng.next_below(len(pool))]
        newest = f"v{d + 3 + step}"
        cur = replay_reductions(cur, [ReductionStep(newest, chosen)])
    return cur


def find_handle_pair(X: SimplicialComplex):
    """First admissible facet-pair bijection of X, or None."""
    for f1, f2 in combinations(X.facets, 2):
        if set(f1) & set(f2):
            continue
        psi = find_admissible_bijection(X, f1, f2)
        if psi is not None:
            return psi
    return None
