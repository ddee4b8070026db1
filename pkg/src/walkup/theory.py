"""Closed-form face-vector formulas and lower-bound checks.

All arithmetic is exact: intermediate values are rationals and any
non-integral face count raises instead of rounding.  No floating point
appears anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .complex import SimplicialComplex
from .errors import (
    InvalidParameters,
    NonIntegralResult,
    NotClosedConnected4Manifold,
    OddDimension,
)
from .homology import homology_profile
from .stacked import is_stacked_sphere


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise NonIntegralResult(f"{what} = {x} is not an integer")
    return int(x)


def stacked_sphere_fvector(d: int, f0: int) -> tuple[int, ...]:
    """Face vector of any stacked d-sphere on f0 vertices.

    f_j = C(d+1, j) f0 - j C(d+2, j+1) for 1 <= j < d, and
    f_d = d f0 - (d+2)(d-1).
    """
    if d < 1 or f0 < d + 2:
        raise InvalidParameters(f"need d >= 1 and f0 >= d+2, got d={d}, f0={f0}")
    counts = [f0]
    for j in range(1, d):
        counts.append(comb(d + 1, j) * f0 - j * comb(d + 2, j + 1))
    counts.append(d * f0 - (d + 2) * (d - 1))
    return tuple(counts)


def walkup_fvector_even(d: int, f0: int, chi: int) -> tuple[int, ...]:
    """Face vector of a connected even-dimensional Walkup-class member.

    f_j = C(d+1, j) f0 - (j/2) C(d+2, j+1) chi for 1 <= j < d, and
    f_d = d f0 - (d+2)(d-1) chi / 2.  Stacked spheres are the chi = 2
    case and reproduce stacked_sphere_fvector.
    """
    if d < 2 or d % 2 != 0:
        raise OddDimension(f"need an even dimension >= 2, got {d}")
    counts = [Fraction(f0)]
    for j in range(1, d):
        counts.append(
            comb(d + 1, j) * f0 - Fraction(j, 2) * comb(d + 2, j + 1) * chi
        )
    counts.append(d * f0 - Fraction((d + 2) * (d - 1), 2) * chi)
    return tuple(_as_int(c, f"f_{j}") for j, c in enumerate(counts))


def fvector_from_f0_f1(d: int, f0: int, f1: int) -> tuple[int, ...]:
    """Face vector of a Walkup-class member from its vertex and edge counts.

    Valid in every dimension d >= 2:
    f_j = (2/(j+1)) C(d, j-1) f1 - ((j-1)/(j+1)) C(d+1, j) f0 for j < d,
    f_d = ((2d-2)/(d+1)) f1 - (d-2) f0.
    """
    if d < 2:
        raise InvalidParameters(f"need d >= 2, got {d}")
    counts = [Fraction(f0), Fraction(f1)]
    for j in range(2, d):
        counts.append(
            Fraction(2, j + 1) * comb(d, j - 1) * f1
            - Fraction(j - 1, j + 1) * comb(d + 1, j) * f0
        )
    counts.append(Fraction(2 * d - 2, d + 1) * f1 - (d - 2) * f0)
    return tuple(_as_int(c, f"f_{j}") for j, c in enumerate(counts))


def dehn_sommerville_4(f0: int, f1: int, chi: int) -> tuple[int, ...]:
    """Completion of a 4-manifold face vector from f0, f1 and chi."""
    return (
        f0,
        f1,
        4 * f1 - 10 * (f0 - chi),
        5 * f1 - 15 * (f0 - chi),
        2 * f1 - 6 * (f0 - chi),
    )


def is_two_neighborly(X: SimplicialComplex) -> bool:
    """Every pair of vertices spans an edge: f1 = C(f0, 2)."""
    f = X.f_vector()
    if len(f) < 2:
        return False
    return f[1] == comb(f[0], 2)


def in_walkup_class(X: SimplicialComplex) -> bool:
    """Membership test: every vertex link is a stacked (d-1)-sphere.

    For d <= 2 the class consists of all closed triangulated d-manifolds,
    so the test degenerates to every link being a single cycle (d = 2) or
    a point pair (d = 1).
    """
    if X.is_empty:
        return False
    d = X.dimension
    if d < 1:
        return False
    for v in X.vertices:
        link = X.vertex_link(v)
        if link.dimension != d - 1:
            return False
        if d == 1:
            if len(link.vertices) != 2:
                return False
        elif not is_stacked_sphere(link):
            return False
    return True


@dataclass(frozen=True)
class BoundCheck:
    name: str
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs >= self.rhs

    @property
    def tight(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class BoundReport:
    """Both 4-manifold lower bounds with tightness flags.

    edge_bound is 2 f1 >= 10 f0 - 15 chi (integer form of the edge lower
    bound); vertex_bound is f0 (f0 - 11) >= -15 chi.  Equality in the
    vertex bound characterizes 2-neighborly Walkup-class members, so the
    report also carries the 2-neighborliness of the input.
    """

    edge_bound: BoundCheck
    vertex_bound: BoundCheck
    euler: int
    two_neighborly: bool

    @property
    def overall_equality(self) -> bool:
        return self.edge_bound.tight and self.vertex_bound.tight


def check_bounds_4manifold(X: SimplicialComplex) -> BoundReport:
    """Evaluate both lower bounds on a closed connected 4-pseudomanifold.

    The Euler characteristic is always recomputed from the complex.  The
    operation verifies closedness and connectivity; it does not certify
    that the input is a genuine PL manifold.
    """
    if X.dimension != 4 or not X.is_closed_pseudomanifold() or not X.is_connected():
        raise NotClosedConnected4Manifold(
            "need a closed connected 4-dimensional weak pseudomanifold"
        )
    f = X.f_vector()
    chi = homology_profile(X).euler
    edge = BoundCheck(name="2f1 >= 10f0 - 15chi", lhs=2 * f[1], rhs=10 * f[0] - 15 * chi)
    vertex = BoundCheck(name="f0(f0-11) >= -15chi", lhs=f[0] * (f[0] - 11), rhs=-15 * chi)
    return BoundReport(
        edge_bound=edge,
        vertex_bound=vertex,
        euler=chi,
        two_neighborly=is_two_neighborly(X),
    )
