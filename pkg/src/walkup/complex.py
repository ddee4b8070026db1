"""Pure simplicial complexes represented by their facet lists.

A complex is stored as the sorted tuple of its facets; faces of lower
dimension are enumerated on demand and memoized.  Complexes are immutable
after construction, all queries are pure functions, and the memoized
caches are filled under a lock, so instances can be shared freely across
threads.

Vertex labels are plain strings ordered lexicographically; that order is
used everywhere (inside faces, between facets, for tie-breaking).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from itertools import combinations
from math import inf
from typing import Iterable, Sequence

from .errors import (
    DuplicateFacet,
    DuplicateVertexInFacet,
    EmptyBoundary,
    EmptyInput,
    FaceNotPresent,
    InvalidLabel,
    MixedDimensions,
    NotPseudomanifoldWithBoundary,
    UnknownVertex,
)

Face = tuple[str, ...]

# Reserved for clone labels produced by handle deletion; rejected in any
# user-supplied label so cut operations can always mint fresh names.
CLONE_MARKER = "~"


def check_label(name: str) -> str:
    if not isinstance(name, str) or not name:
        raise InvalidLabel(f"vertex label must be a non-empty string, got {name!r}")
    for ch in name:
        if ch.isspace() or ch == "#":
            raise InvalidLabel(f"label {name!r} contains whitespace or '#'")
        if ch == CLONE_MARKER:
            raise InvalidLabel(
                f"label {name!r} contains the reserved clone marker {CLONE_MARKER!r}"
            )
    return name


def make_face(vertices: Iterable[str]) -> Face:
    """Canonicalize a vertex collection into a sorted, duplicate-free face."""
    vs = tuple(sorted(vertices))
    for a, b in zip(vs, vs[1:]):
        if a == b:
            raise DuplicateVertexInFacet(f"vertex {a!r} repeated in facet {vs}")
    return vs


@dataclass(frozen=True)
class DualGraph:
    """Facet-adjacency graph: facets are nodes, shared ridges are edges.

    ridge_incidence maps every co-dimension-one face to the tuple of
    facets containing it.  The weak-pseudomanifold flags summarize the
    ridge multiplicities (at most two / exactly two facets per ridge).
    """

    nodes: tuple[Face, ...]
    edges: tuple[tuple[Face, Face], ...]
    ridge_incidence: dict[Face, tuple[Face, ...]]
    is_weak_pseudomanifold: bool
    is_closed: bool

    @property
    def has_boundary(self) -> bool:
        return self.is_weak_pseudomanifold and not self.is_closed

    def adjacency(self) -> dict[Face, list[Face]]:
        adj: dict[Face, list[Face]] = {f: [] for f in self.nodes}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def is_connected(self) -> bool:
        if not self.nodes:
            return False
        adj = self.adjacency()
        seen = {self.nodes[0]}
        stack = [self.nodes[0]]
        while stack:
            for g in adj[stack.pop()]:
                if g not in seen:
                    seen.add(g)
                    stack.append(g)
        return len(seen) == len(self.nodes)

    def is_tree(self) -> bool:
        return self.is_connected() and len(self.edges) == len(self.nodes) - 1


class SimplicialComplex:
    """A finite pure simplicial complex given by its facets.

    Use from_facets() for validated construction from raw label lists;
    the constructor itself expects already-canonical faces.
    """

    __slots__ = ("facets", "facet_set", "vertices", "_lock", "_cache")

    def __init__(self, facets: Iterable[Face]):
        fs = tuple(sorted(facets))
        if fs:
            dim = len(fs[0])
            for f in fs:
                if len(f) != dim:
                    raise MixedDimensions(
                        f"facet {f} has {len(f)} vertices, expected {dim}"
                    )
        self.facets: tuple[Face, ...] = fs
        self.facet_set: frozenset[Face] = frozenset(fs)
        if len(self.facet_set) != len(fs):
            raise DuplicateFacet("facet list contains repeats")
        vs: set[str] = set()
        for f in fs:
            vs.update(f)
        self.vertices: tuple[str, ...] = tuple(sorted(vs))
        # reentrant: memoized computations may consult other memoized queries
        self._lock = threading.RLock()
        self._cache: dict[str, object] = {}

    # -- identity ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SimplicialComplex) and self.facets == other.facets

    def __hash__(self) -> int:
        return hash(self.facets)

    def __repr__(self) -> str:
        return (
            f"SimplicialComplex(dim={self.dimension}, "
            f"f0={len(self.vertices)}, facets={len(self.facets)})"
        )

    @property
    def dimension(self) -> int:
        """Dimension of the facets; -1 for the empty complex."""
        return len(self.facets[0]) - 1 if self.facets else -1

    @property
    def is_empty(self) -> bool:
        return not self.facets

    def _memo(self, key: str, compute):
        cache = self._cache
        val = cache.get(key)
        if val is None:
            with self._lock:
                val = cache.get(key)
                if val is None:
                    val = compute()
                    cache[key] = val
        return val

    # -- face enumeration ---------------------------------------------------

    def faces_by_dim(self) -> dict[int, tuple[Face, ...]]:
        """All faces grouped by dimension, each group lexicographically sorted."""

        def compute():
            buckets: dict[int, set[Face]] = {j: set() for j in range(self.dimension + 1)}
            for facet in self.facets:
                for k in range(1, len(facet) + 1):
                    buckets[k - 1].update(combinations(facet, k))
            return {j: tuple(sorted(s)) for j, s in buckets.items()}

        return self._memo("faces_by_dim", compute)

    def _face_sets(self) -> dict[int, frozenset[Face]]:
        return self._memo(
            "face_sets",
            lambda: {j: frozenset(fs) for j, fs in self.faces_by_dim().items()},
        )

    def faces_of_dim(self, j: int) -> tuple[Face, ...]:
        return self.faces_by_dim().get(j, ())

    def has_face(self, face: Sequence[str]) -> bool:
        f = tuple(sorted(face))
        return f in self._face_sets().get(len(f) - 1, frozenset())

    def f_vector(self) -> tuple[int, ...]:
        """Face counts (f0, ..., fd); the empty complex gives ()."""
        fb = self.faces_by_dim()
        return tuple(len(fb[j]) for j in range(self.dimension + 1))

    # -- links, induced subcomplexes ----------------------------------------

    def link(self, face: Sequence[str]) -> "SimplicialComplex":
        """Link of a face: residues of the facets containing it."""
        f = tuple(sorted(face))
        if f and not self.has_face(f):
            raise FaceNotPresent(f"{f} is not a face")
        fset = set(f)
        residues = [
            tuple(v for v in facet if v not in fset)
            for facet in self.facets
            if fset.issubset(facet)
        ]
        residues = [r for r in residues if r]
        return SimplicialComplex(set(residues))

    def vertex_link(self, v: str) -> "SimplicialComplex":
        if v not in self._vertex_set():
            raise UnknownVertex(f"unknown vertex {v!r}")
        return self.link((v,))

    def _vertex_set(self) -> frozenset[str]:
        return self._memo("vertex_set", lambda: frozenset(self.vertices))

    def induced_subcomplex(self, subset: Iterable[str]) -> "FaceSet":
        """All faces whose vertices lie in the subset, as a face system.

        The result need not be pure, so it is returned as a FaceSet
        carrying the maximal faces.
        """
        s = frozenset(subset)
        unknown = s - self._vertex_set()
        if unknown:
            raise UnknownVertex(f"unknown vertices {sorted(unknown)}")
        # Faces inside s are exactly the subsets of facet-intersections,
        # so the maximal ones are the inclusion-maximal intersections.
        inters = {tuple(sorted(set(f) & s)) for f in self.facets}
        inters.discard(())
        maximal = [
            a for a in inters
            if not any(a != b and set(a) <= set(b) for b in inters)
        ]
        return FaceSet(maximal)

    # -- dual graph / boundary ----------------------------------------------

    def dual_graph(self) -> DualGraph:
        def compute():
            ridge_map: dict[Face, list[Face]] = {}
            for facet in self.facets:
                for i in range(len(facet)):
                    ridge = facet[:i] + facet[i + 1:]
                    ridge_map.setdefault(ridge, []).append(facet)
            edges = []
            weak = True
            closed = bool(self.facets)
            for ridge, fs in ridge_map.items():
                if len(fs) == 2:
                    a, b = sorted(fs)
                    edges.append((a, b))
                elif len(fs) == 1:
                    closed = False
                else:
                    weak = closed = False
            return DualGraph(
                nodes=self.facets,
                edges=tuple(sorted(set(edges))),
                ridge_incidence={r: tuple(sorted(fs)) for r, fs in ridge_map.items()},
                is_weak_pseudomanifold=weak,
                is_closed=weak and closed,
            )

        return self._memo("dual_graph", compute)

    def is_closed_pseudomanifold(self) -> bool:
        """Every ridge in exactly two facets (dual graph may be disconnected)."""
        return not self.is_empty and self.dual_graph().is_closed

    def boundary_complex(self) -> "SimplicialComplex":
        """Subcomplex generated by the ridges lying in exactly one facet."""
        if self.dimension < 1:
            raise NotPseudomanifoldWithBoundary(
                "boundary undefined below dimension 1"
            )
        dg = self.dual_graph()
        if not dg.is_weak_pseudomanifold:
            raise NotPseudomanifoldWithBoundary("a ridge lies in more than two facets")
        bound = [r for r, fs in dg.ridge_incidence.items() if len(fs) == 1]
        if not bound:
            raise EmptyBoundary("complex is closed")
        return SimplicialComplex(bound)

    # -- 1-skeleton ----------------------------------------------------------

    def adjacency(self) -> dict[str, frozenset[str]]:
        """Neighbor sets in the edge graph."""

        def compute():
            adj: dict[str, set[str]] = {v: set() for v in self.vertices}
            for (u, v) in self.faces_of_dim(1):
                adj[u].add(v)
                adj[v].add(u)
            return {v: frozenset(ns) for v, ns in adj.items()}

        return self._memo("adjacency", compute)

    def degree(self, v: str) -> int:
        if v not in self._vertex_set():
            raise UnknownVertex(f"unknown vertex {v!r}")
        return len(self.adjacency()[v])

    def graph_distance(self, u: str, v: str) -> int | float:
        """Shortest-path length in the 1-skeleton; inf if disconnected."""
        vs = self._vertex_set()
        if u not in vs or v not in vs:
            raise UnknownVertex(f"unknown vertex in pair ({u!r}, {v!r})")
        if u == v:
            return 0
        adj = self.adjacency()
        dist = {u: 0}
        frontier = [u]
        while frontier:
            nxt = []
            for w in frontier:
                for x in adj[w]:
                    if x not in dist:
                        dist[x] = dist[w] + 1
                        if x == v:
                            return dist[x]
                        nxt.append(x)
            frontier = nxt
        return inf

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        adj = self.adjacency()
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def connected_components(self) -> list["SimplicialComplex"]:
        """Components of the 1-skeleton as sub-complexes, sorted by min vertex."""
        adj = self.adjacency()
        comp: dict[str, int] = {}
        roots = []
        for v in self.vertices:
            if v in comp:
                continue
            idx = len(roots)
            roots.append(v)
            comp[v] = idx
            stack = [v]
            while stack:
                for w in adj[stack.pop()]:
                    if w not in comp:
                        comp[w] = idx
                        stack.append(w)
        parts: dict[int, list[Face]] = {i: [] for i in range(len(roots))}
        for f in self.facets:
            parts[comp[f[0]]].append(f)
        return [SimplicialComplex(parts[i]) for i in range(len(roots))]

    # -- clique complex -------------------------------------------------------

    def clique_complex(self) -> "FaceSet":
        """Cliques of the 1-skeleton, returned by their maximal members.

        The output is pure only when all maximal cliques have one size;
        callers needing a SimplicialComplex must go through as_complex().
        """
        adj = self.adjacency()
        order = {v: i for i, v in enumerate(self.vertices)}
        nbrs = {v: set(adj[v]) for v in self.vertices}
        cliques: list[Face] = []

        def expand(r: set[str], p: set[str], x: set[str]) -> None:
            if not p and not x:
                cliques.append(tuple(sorted(r)))
                return
            pivot = max(p | x, key=lambda v: len(p & nbrs[v]))
            for v in sorted(p - nbrs[pivot], key=order.get):
                expand(r | {v}, p & nbrs[v], x & nbrs[v])
                p.remove(v)
                x.add(v)

        expand(set(), set(self.vertices), set())
        return FaceSet(sorted(cliques))


class FaceSet:
    """A finite face system given by its maximal faces (possibly non-pure)."""

    __slots__ = ("maximal_faces", "_all")

    def __init__(self, maximal_faces: Iterable[Face]):
        self.maximal_faces: tuple[Face, ...] = tuple(sorted(set(maximal_faces)))
        self._all: frozenset[Face] | None = None

    @property
    def dimension(self) -> int:
        return max((len(f) - 1 for f in self.maximal_faces), default=-1)

    @property
    def is_empty(self) -> bool:
        return not self.maximal_faces

    @property
    def is_pure(self) -> bool:
        sizes = {len(f) for f in self.maximal_faces}
        return len(sizes) <= 1

    @property
    def vertices(self) -> tuple[str, ...]:
        vs: set[str] = set()
        for f in self.maximal_faces:
            vs.update(f)
        return tuple(sorted(vs))

    def all_faces(self) -> frozenset[Face]:
        if self._all is None:
            out: set[Face] = set()
            for f in self.maximal_faces:
                for k in range(1, len(f) + 1):
                    out.update(combinations(f, k))
            self._all = frozenset(out)
        return self._all

    def faces_of_dim(self, j: int) -> tuple[Face, ...]:
        return tuple(sorted(f for f in self.all_faces() if len(f) == j + 1))

    def has_face(self, face: Sequence[str]) -> bool:
        return tuple(sorted(face)) in self.all_faces()

    def f_vector(self) -> tuple[int, ...]:
        counts = [0] * (self.dimension + 1)
        for f in self.all_faces():
            counts[len(f) - 1] += 1
        return tuple(counts)

    def as_complex(self) -> SimplicialComplex:
        """The same face system as a pure complex; raises if non-pure."""
        if not self.is_pure:
            raise MixedDimensions("face system is not pure")
        return SimplicialComplex(self.maximal_faces)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FaceSet) and self.maximal_faces == other.maximal_faces

    def __hash__(self) -> int:
        return hash(self.maximal_faces)

    def __repr__(self) -> str:
        return f"FaceSet(dim={self.dimension}, maximal={len(self.maximal_faces)})"


def from_facets(raw_facets: Iterable[Iterable[str]]) -> SimplicialComplex:
    """Build a complex from raw vertex-label lists, validating everything.

    Rejects empty input, repeated vertices inside a facet, mixed facet
    dimensions and repeated facets.
    """
    rows = [list(f) for f in raw_facets]
    if not rows:
        raise EmptyInput("no facets given")
    faces = []
    for row in rows:
        if not row:
            raise EmptyInput("empty facet")
        for label in row:
            check_label(label)
        faces.append(make_face(row))
    dims = {len(f) for f in faces}
    if len(dims) > 1:
        raise MixedDimensions(f"facet sizes {sorted(dims)} are mixed")
    if len(set(faces)) != len(faces):
        seen: set[Face] = set()
        for f in faces:
            if f in seen:
                raise DuplicateFacet(f"facet {f} repeated")
            seen.add(f)
    return SimplicialComplex(faces)


def empty_complex() -> SimplicialComplex:
    return SimplicialComplex(())


def is_standard_sphere(X: SimplicialComplex) -> bool:
    """True iff X is the boundary of a simplex: all d+1-subsets of d+2 vertices."""
    if X.is_empty:
        return False
    n = len(X.vertices)
    d = X.dimension
    return n == d + 2 and len(X.facets) == n


def induces_standard_sphere(X: SimplicialComplex, subset: Iterable[str]) -> bool:
    """True iff X[subset] consists of all proper subsets of the subset.

    The subset must have d+2 vertices for a (d)-sphere check relative to
    its own size: every proper subset a face of X, the whole set not.
    """
    s = tuple(sorted(set(subset)))
    if X.has_face(s):
        return False
    for k in range(1, len(s)):
        for sub in combinations(s, k):
            if not X.has_face(sub):
                return False
    return True
