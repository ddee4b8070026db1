"""Combinatorial handle surgery: addition, deletion, connected sums, and
the decomposition of Walkup-class members into a stacked sphere plus
handles.

Handle deletion is the inverse of handle addition.  Cutting along an
induced standard sphere removes the dual-graph adjacencies across ridges
inside the sphere, splits each affected vertex star into its cut
components, clones the vertices one copy per component, and caps the two
boundary spheres with fresh facets.  The reconstruction is validated by
replaying the returned bijection and demanding the exact input back.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .complex import (
    CLONE_MARKER,
    Face,
    SimplicialComplex,
    induces_standard_sphere,
)
from .errors import (
    CutValidationFailed,
    DimensionTooLow,
    NotAFacet,
    NotAdmissible,
    NotClosedPseudomanifold,
    NotInducedStandardSphere,
    NotWalkup,
    WouldCreateDuplicateFacet,
)
from .stacked import is_stacked_sphere
from .theory import in_walkup_class


@dataclass(frozen=True)
class VertexBijection:
    """A facet-to-facet vertex bijection (the gluing data of one handle)."""

    source_facet: Face
    target_facet: Face
    pairs: tuple[tuple[str, str], ...]

    def __post_init__(self):
        srcs = tuple(sorted(p[0] for p in self.pairs))
        tgts = tuple(sorted(p[1] for p in self.pairs))
        if srcs != self.source_facet:
            raise ValueError("pair sources do not enumerate the source facet")
        if tgts != self.target_facet:
            raise ValueError("pair targets do not enumerate the target facet")
        if set(self.source_facet) & set(self.target_facet):
            raise ValueError("source and target facets must be disjoint")

    @property
    def mapping(self) -> dict[str, str]:
        return dict(self.pairs)

    def relabeled(self, rename: dict[str, str]) -> "VertexBijection":
        """The same gluing after a global vertex relabeling."""
        return VertexBijection(
            source_facet=tuple(sorted(rename.get(v, v) for v in self.source_facet)),
            target_facet=tuple(sorted(rename.get(v, v) for v in self.target_facet)),
            pairs=tuple(
                sorted((rename.get(a, a), rename.get(b, b)) for a, b in self.pairs)
            ),
        )


def bijection_from_map(mapping: dict[str, str]) -> VertexBijection:
    src = tuple(sorted(mapping))
    tgt = tuple(sorted(mapping.values()))
    return VertexBijection(src, tgt, tuple(sorted(mapping.items())))


def is_admissible(X: SimplicialComplex, psi: VertexBijection) -> bool:
    """True iff every pair sits at graph distance >= 3 in the 1-skeleton."""
    if psi.source_facet not in X.facet_set:
        raise NotAFacet(f"{psi.source_facet} is not a facet")
    if psi.target_facet not in X.facet_set:
        raise NotAFacet(f"{psi.target_facet} is not a facet")
    return all(X.graph_distance(a, b) >= 3 for a, b in psi.pairs)


def handle_addition(X: SimplicialComplex, psi: VertexBijection) -> SimplicialComplex:
    """Remove the two glued facets and identify sources with targets.

    Drops f0 by d+1 and the facet count by 2; the identified vertex set
    induces a standard (d-1)-sphere in the result.
    """
    if not X.is_closed_pseudomanifold():
        raise NotClosedPseudomanifold("handle addition needs a closed complex")
    if not is_admissible(X, psi):
        raise NotAdmissible(
            f"bijection {psi.source_facet} -> {psi.target_facet} moves a vertex "
            "closer than distance 3"
        )
    rename = psi.mapping
    new_facets: dict[Face, Face] = {}
    for f in X.facets:
        if f == psi.source_facet or f == psi.target_facet:
            continue
        g = tuple(sorted(rename.get(v, v) for v in f))
        if len(set(g)) != len(g):
            raise NotAdmissible(f"facet {f} would collapse under the identification")
        if g in new_facets:
            raise WouldCreateDuplicateFacet(
                f"facets {new_facets[g]} and {f} both become {g}"
            )
        new_facets[g] = f
    return SimplicialComplex(new_facets)


def disjoint_union(
    X1: SimplicialComplex, X2: SimplicialComplex
) -> tuple[SimplicialComplex, dict[str, str]]:
    """Union of two complexes, relabeling X2 on collisions (suffix "'").

    Returns the union together with the relabeling applied to X2.
    """
    taken = set(X1.vertices)
    rename: dict[str, str] = {}
    for v in X2.vertices:
        w = v
        while w in taken:
            w += "'"
        if w != v:
            rename[v] = w
        taken.add(w)
    facets2 = [tuple(sorted(rename.get(v, v) for v in f)) for f in X2.facets]
    return SimplicialComplex(set(X1.facets) | set(facets2)), rename


def connected_sum(
    X1: SimplicialComplex,
    X2: SimplicialComplex,
    psi: VertexBijection | dict[str, str],
) -> SimplicialComplex:
    """Glue X1 and X2 along psi (source facet in X1, target facet in X2).

    psi may be a plain source-to-target vertex mapping, since a
    VertexBijection cannot be formed before colliding labels of X2 are
    renamed; the target side is translated through the relabeling.
    """
    union, rename = disjoint_union(X1, X2)
    raw = psi.mapping if isinstance(psi, VertexBijection) else dict(psi)
    translated = {a: rename.get(b, b) for a, b in raw.items()}
    return handle_addition(union, bijection_from_map(translated))


def find_admissible_bijection(
    X: SimplicialComplex, sigma1: Face, sigma2: Face
) -> VertexBijection | None:
    """Search for an admissible bijection between two disjoint facets.

    Backtracking perfect matching on the pairs at distance >= 3; returns
    the lexicographically first matching found, or None.
    """
    if sigma1 not in X.facet_set or sigma2 not in X.facet_set:
        raise NotAFacet("both endpoints must be facets")
    if set(sigma1) & set(sigma2):
        return None
    allowed = {
        u: [v for v in sigma2 if X.graph_distance(u, v) >= 3] for u in sigma1
    }
    order = sorted(sigma1, key=lambda u: (len(allowed[u]), u))
    assignment: dict[str, str] = {}
    used: set[str] = set()

    def backtrack(i: int) -> bool:
        if i == len(order):
            return True
        u = order[i]
        for v in allowed[u]:
            if v not in used:
                assignment[u] = v
                used.add(v)
                if backtrack(i + 1):
                    return True
                used.remove(v)
                del assignment[u]
        return False

    if not backtrack(0):
        return None
    return bijection_from_map(assignment)


def find_induced_standard_spheres(X: SimplicialComplex) -> list[tuple[str, ...]]:
    """All (d+1)-vertex sets inducing a standard (d-1)-sphere.

    Candidates come from each vertex x of degree >= d+2: the d-cliques in
    the edge graph of its link that are not faces of the link, joined
    with x.  Every candidate is then verified directly against the face
    set, so no false positives survive; the candidate generation is
    complete on Walkup-class inputs.
    """
    d = X.dimension
    if d < 3:
        raise DimensionTooLow(f"need dimension >= 3, got {d}")
    found: set[tuple[str, ...]] = set()
    adj = X.adjacency()
    for x in X.vertices:
        if len(adj[x]) < d + 2:
            continue
        link = X.vertex_link(x)
        link_cliques = link.clique_complex()
        candidates: set[Face] = set()
        for clique in link_cliques.maximal_faces:
            if len(clique) >= d:
                candidates.update(combinations(clique, d))
        for sigma in candidates:
            if link.has_face(sigma):
                continue
            s = tuple(sorted(sigma + (x,)))
            if s in found:
                continue
            if induces_standard_sphere(X, s):
                found.add(s)
    return sorted(found)


def _fresh_clone(label: str, taken: set[str]) -> str:
    i = 1
    while f"{label}{CLONE_MARKER}{i}" in taken:
        i += 1
    return f"{label}{CLONE_MARKER}{i}"


def handle_deletion(
    Y: SimplicialComplex, subset: Iterable[str]
) -> tuple[SimplicialComplex, VertexBijection]:
    """Cut a closed manifold along an induced standard sphere.

    Returns the cut complex together with the bijection whose handle
    addition restores the input exactly; the round trip is validated
    before returning.
    """
    result, psi, _ = _cut_along_sphere(Y, subset)
    return result, psi


def _cut_along_sphere(
    Y: SimplicialComplex, subset: Iterable[str]
) -> tuple[SimplicialComplex, VertexBijection, dict[Face, dict[str, str]]]:
    """handle_deletion plus the per-facet relabeling actually applied."""
    d = Y.dimension
    if d < 3:
        raise DimensionTooLow(f"need dimension >= 3, got {d}")
    if not Y.is_closed_pseudomanifold():
        raise NotClosedPseudomanifold("handle deletion needs a closed complex")
    S = tuple(sorted(set(subset)))
    if len(S) != d + 1 or not set(S) <= set(Y.vertices):
        raise NotInducedStandardSphere(f"{S} is not a (d+1)-vertex subset")
    if not induces_standard_sphere(Y, S):
        raise NotInducedStandardSphere(f"{S} does not induce a standard sphere")
    s_set = set(S)

    # Partition each vertex star by connectivity in the cut dual graph
    # (adjacency across ridges inside S removed).
    part_of: dict[str, dict[Face, int]] = {}
    for x in S:
        star = [f for f in Y.facets if x in f]
        index = {f: i for i, f in enumerate(star)}
        parent = list(range(len(star)))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for fa, fb in combinations(star, 2):
            shared = set(fa) & set(fb)
            if len(shared) == d and not shared <= s_set:
                ra, rb = find(index[fa]), find(index[fb])
                if ra != rb:
                    parent[ra] = rb
        roots: dict[int, int] = {}
        labels: dict[Face, int] = {}
        for f in star:  # star is facet-sorted, so part ids are canonical
            r = find(index[f])
            if r not in roots:
                roots[r] = len(roots)
            labels[f] = roots[r]
        part_of[x] = labels
        if len(roots) != 2:
            raise CutValidationFailed(
                f"star of {x!r} separates into {len(roots)} parts, expected 2"
            )

    # Tentative clone names: part 0 keeps the label, part 1 gets a clone.
    taken = set(Y.vertices)
    clone: dict[str, str] = {}
    for x in S:
        clone[x] = _fresh_clone(x, taken)
        taken.add(clone[x])

    def tentative(f: Face) -> Face:
        return tuple(
            sorted(
                clone[v] if v in s_set and part_of[v][f] == 1 else v for v in f
            )
        )

    cut_facets = {f: tentative(f) for f in Y.facets}
    cut = SimplicialComplex(set(cut_facets.values()))
    if len(cut.facets) != len(Y.facets):
        raise CutValidationFailed("cut collapsed distinct facets")

    # The cut surface must consist of two standard spheres, one copy of
    # each S-vertex on each; identify the two boundary components.
    try:
        boundary = cut.boundary_complex()
    except Exception as e:
        raise CutValidationFailed(f"cut has no clean boundary: {e}") from e
    comps = boundary.connected_components()
    if len(comps) != 2:
        raise CutValidationFailed(
            f"cut boundary has {len(comps)} components, expected 2"
        )
    copies = {x: {x, clone[x]} for x in S}
    side_a, side_b = comps[0], comps[1]
    for x in S:
        in_a = copies[x] & set(side_a.vertices)
        in_b = copies[x] & set(side_b.vertices)
        if len(in_a) != 1 or len(in_b) != 1:
            raise CutValidationFailed(
                f"copies of {x!r} are not split across the boundary spheres"
            )

    # Canonical final names: the component containing the smallest label
    # keeps the originals, the other one gets the clones.
    keep = side_a if min(side_a.vertices) <= min(side_b.vertices) else side_b
    keep_vs = set(keep.vertices)
    final: dict[str, str] = {}
    for x in S:
        kept_copy = next(iter(copies[x] & keep_vs))
        other_copy = next(iter(copies[x] - {kept_copy}))
        final[kept_copy] = x
        final[other_copy] = clone[x]

    def finalize(f: Face) -> Face:
        return tuple(sorted(final.get(v, v) for v in f))

    facet_relabels: dict[Face, dict[str, str]] = {}
    new_facets: set[Face] = set()
    for f in Y.facets:
        t = cut_facets[f]
        g = finalize(t)
        new_facets.add(g)
        vmap = {}
        for orig in f:
            if orig in s_set:
                tent = clone[orig] if part_of[orig][f] == 1 else orig
                cur = final.get(tent, tent)
                if cur != orig:
                    vmap[orig] = cur
        if vmap:
            facet_relabels[f] = vmap

    cap_keep = S
    cap_clone = tuple(sorted(clone[x] for x in S))
    new_facets.add(cap_keep)
    new_facets.add(cap_clone)
    result = SimplicialComplex(new_facets)

    psi = VertexBijection(
        source_facet=cap_clone,
        target_facet=cap_keep,
        pairs=tuple(sorted((clone[x], x) for x in S)),
    )
    try:
        restored = handle_addition(result, psi)
    except Exception as e:
        raise CutValidationFailed(f"reattachment failed: {e}") from e
    if restored != Y:
        raise CutValidationFailed("round trip did not reproduce the input")
    return result, psi, facet_relabels


@dataclass(frozen=True)
class HandleLedger:
    """A stacked-sphere base plus an ordered, replayable handle list."""

    base: SimplicialComplex
    handles: tuple[VertexBijection, ...]

    def replay(self) -> SimplicialComplex:
        """Re-add every handle in order, starting from the base.

        Each addition renames vertices globally, so the bijections still
        pending are rewritten through the applied identification.
        """
        cur = self.base
        pending = list(self.handles)
        while pending:
            psi = pending.pop(0)
            cur = handle_addition(cur, psi)
            rename = psi.mapping
            pending = [p.relabeled(rename) for p in pending]
        return cur


def kalai_decompose(X: SimplicialComplex) -> HandleLedger:
    """Decompose a connected Walkup-class member into base + handles.

    Repeatedly deletes the handle at the lexicographically smallest
    induced standard sphere; on disconnection the components are
    processed separately and re-joined into the base afterwards.  The
    ledger holds exactly beta_1 handles; replaying it reproduces the
    input exactly.
    """
    d = X.dimension
    if d < 4:
        raise DimensionTooLow(f"need dimension >= 4, got {d}")
    if not X.is_connected():
        raise NotWalkup("input complex is disconnected")
    if not in_walkup_class(X):
        raise NotWalkup("some vertex link is not a stacked sphere")

    events: list[dict] = []  # {"psi": VertexBijection, "split": bool}
    residues: list[SimplicialComplex] = []
    work: list[SimplicialComplex] = [X]
    while work:
        Y = work.pop(0)
        if is_stacked_sphere(Y):
            residues.append(Y)
            continue
        spheres = find_induced_standard_spheres(Y)
        if not spheres:
            raise NotWalkup("no induced standard sphere found; not in the class")
        target = min(spheres)
        cut, psi, facet_relabels = _cut_along_sphere(Y, target)
        # Earlier caps live in Y; carry their labels through this cut.
        for ev in events:
            p: VertexBijection = ev["psi"]
            changed = False
            for facet in (p.source_facet, p.target_facet):
                if facet in facet_relabels:
                    changed = True
            if changed:
                rename: dict[str, str] = {}
                for facet in (p.source_facet, p.target_facet):
                    rename.update(facet_relabels.get(facet, {}))
                ev["psi"] = p.relabeled(rename)
        comps = cut.connected_components()
        events.append({"psi": psi, "split": len(comps) > 1})
        work = sorted(comps, key=lambda c: c.vertices[0]) + work

    # Assemble: re-join the split pieces (building the base), then stack
    # the true handles on top, most recently deleted first.
    union = residues[0]
    for extra in residues[1:]:
        union = SimplicialComplex(set(union.facets) | set(extra.facets))
    splits = [ev["psi"] for ev in events if ev["split"]]
    handles = [ev["psi"] for ev in events if not ev["split"]]

    base = union
    pending = list(reversed(splits))
    rest = list(reversed(handles))
    while pending:
        psi = pending.pop(0)
        try:
            base = handle_addition(base, psi)
        except Exception as e:
            raise CutValidationFailed(f"base reassembly failed: {e}") from e
        rename = psi.mapping
        pending = [p.relabeled(rename) for p in pending]
        rest = [p.relabeled(rename) for p in rest]
    if not is_stacked_sphere(base):
        raise CutValidationFailed("reassembled base is not a stacked sphere")

    ledger = HandleLedger(base=base, handles=tuple(rest))
    if ledger.replay() != X:
        raise CutValidationFailed("ledger replay did not reproduce the input")
    return ledger
