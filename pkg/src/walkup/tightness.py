"""Mod-2 tightness: injectivity of induced homology maps.

For an induced subcomplex Y = X[S], the chain complex of Y is a
subcomplex of the chain complex of X, so a cycle of Y bounding in X is
the same thing as a chain of Y lying in B_k(X).  The degree-k map is
therefore injective iff

    dim(C_k(Y) ∩ B_k(X)) = dim B_k(Y).

The left side is computed through the orthogonal complement of B_k(X):
restricting the complement's basis matrix to the columns of Y's k-faces
gives dim(C_k(Y) ∩ B_k(X)) = f_k(Y) - rank(restriction).  Both sides
then grow monotonically as vertices are added to S, which the exhaustive
scan exploits: subsets are enumerated depth-first by ascending vertex
index, face insertions feed append-only GF(2) pivot structures, and
backtracking just pops the pivots again.  Every subset is still visited
and checked individually.

homology_map_injective is the independent, direct implementation of the
same test (kernel and image bases stacked and ranked); the scan is
cross-checked against it in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complex import SimplicialComplex
from .errors import SubsetSpaceTooLarge, UnknownVertex
from .homology import nullspace_gf2, rank_gf2
from .rng import SplitMix64

DEFAULT_EXHAUSTIVE_CEILING = 20


# --------------------------------------------------------------- direct test

def homology_map_injective(X: SimplicialComplex, subset, k: int) -> bool:
    """Does H_k(X[subset]) -> H_k(X) inject?

    Direct computation: a basis of Z_k(Y) is embedded into the k-chain
    space of X, stacked against a generating set of B_k(X), and the
    intersection dimension dim U + dim W - dim(U+W) is compared with
    dim B_k(Y).
    """
    s = frozenset(subset)
    unknown = s - set(X.vertices)
    if unknown:
        raise UnknownVertex(f"unknown vertices {sorted(unknown)}")
    if not 0 <= k <= X.dimension:
        return True
    faces_k_all = X.faces_of_dim(k)
    index_k = {f: i for i, f in enumerate(faces_k_all)}
    y_k = [f for f in faces_k_all if set(f) <= s]
    if not y_k:
        return True

    # Z_k(Y): kernel of Y's boundary map, written in X's k-face coordinates.
    if k == 0:
        cycles_y = [1 << index_k[f] for f in y_k]
    else:
        lower_all = X.faces_of_dim(k - 1)
        lower_idx = {f: i for i, f in enumerate(lower_all)}
        rows = []
        for f in y_k:
            v = 0
            for i in range(len(f)):
                v |= 1 << lower_idx[f[:i] + f[i + 1:]]
            rows.append(v)
        # kernel over the y_k columns: transpose to (lower x y_k) and solve
        mat = [0] * len(lower_all)
        for c, v in enumerate(rows):
            while v:
                b = v.bit_length() - 1
                v ^= 1 << b
                mat[b] |= 1 << c
        kernel = nullspace_gf2(mat, len(y_k))
        cycles_y = []
        for u in kernel:
            w = 0
            for c in range(len(y_k)):
                if (u >> c) & 1:
                    w |= 1 << index_k[y_k[c]]
            cycles_y.append(w)

    # B_k(X): boundaries of all (k+1)-faces; B_k(Y): those of Y's.
    upper_all = X.faces_of_dim(k + 1)
    bx = []
    by = []
    for f in upper_all:
        v = 0
        for i in range(len(f)):
            v |= 1 << index_k[f[:i] + f[i + 1:]]
        bx.append(v)
        if set(f) <= s:
            by.append(v)
    dim_z = len(cycles_y)
    dim_bx = rank_gf2(bx)
    dim_sum = rank_gf2(bx + cycles_y)
    dim_meet = dim_z + dim_bx - dim_sum
    return dim_meet == rank_gf2(by)


# ------------------------------------------------------------------- reports

@dataclass(frozen=True)
class TightnessReport:
    mode: str  # "exhaustive" or "sampled"
    checked: int
    violations: tuple[tuple[tuple[str, ...], int], ...]
    sample_count: int | None = None
    seed: int | None = None

    @property
    def verdict(self) -> str:
        if self.violations:
            return "not-tight"
        return "tight" if self.mode == "exhaustive" else "tight-on-sample"


# ----------------------------------------------------------- incremental scan

class _PivotSpace:
    """Append-only GF(2) span with undo: insert returns the pivot key or None."""

    __slots__ = ("pivots", "rank")

    def __init__(self):
        self.pivots: dict[int, int] = {}
        self.rank = 0

    def insert(self, v: int) -> int | None:
        piv = self.pivots
        while v:
            b = v.bit_length() - 1
            p = piv.get(b)
            if p is None:
                piv[b] = v
                self.rank += 1
                return b
            v ^= p
        return None

    def remove(self, b: int) -> None:
        del self.pivots[b]
        self.rank -= 1


class TightnessEngine:
    """Shared precomputation for scanning the subsets of one complex."""

    def __init__(self, X: SimplicialComplex):
        self.X = X
        self.n = len(X.vertices)
        self.d = X.dimension
        vidx = {v: i for i, v in enumerate(X.vertices)}
        d = self.d

        self.faces: list[tuple] = [X.faces_of_dim(k) for k in range(d + 1)]
        index = [
            {f: i for i, f in enumerate(self.faces[k])} for k in range(d + 1)
        ]

        # boundary of each k-face over (k-1)-face indices
        self.bd: list[list[int]] = [[]]
        for k in range(1, d + 1):
            idx = index[k - 1]
            col = []
            for f in self.faces[k]:
                v = 0
                for i in range(len(f)):
                    v |= 1 << idx[f[:i] + f[i + 1:]]
                col.append(v)
            self.bd.append(col)

        # orthogonal complements of the boundary spaces B_k(X), k < d,
        # transposed into one column vector per k-face
        self.colvec: list[list[int]] = []
        for k in range(d):
            basis = nullspace_gf2(self.bd[k + 1], len(self.faces[k]))
            cols = [0] * len(self.faces[k])
            for b, u in enumerate(basis):
                while u:
                    i = u.bit_length() - 1
                    u ^= 1 << i
                    cols[i] |= 1 << b
            self.colvec.append(cols)

        # faces grouped by their largest vertex, with the rest as a bitmask
        self.by_max: list[list[list[tuple[int, int]]]] = [
            [[] for _ in range(self.n)] for _ in range(d + 1)
        ]
        for k in range(d + 1):
            for i, f in enumerate(self.faces[k]):
                ids = [vidx[v] for v in f]
                m = max(ids)
                rest = 0
                for j in ids:
                    if j != m:
                        rest |= 1 << j
                self.by_max[k][m].append((rest, i))

    # -- one scan ------------------------------------------------------------

    def scan(
        self,
        stop_on_first: bool = True,
        lo: int = 0,
        prefix: tuple[int, ...] = (),
    ) -> tuple[int, list[tuple[tuple[str, ...], int]]]:
        """DFS over all subsets extending prefix with vertices >= lo.

        Returns (number of subsets checked, violations found).  The
        prefix itself is not checked.
        """
        d = self.d
        n = self.n
        cnt = [0] * d
        col = [_PivotSpace() for _ in range(d)]
        bdr = [_PivotSpace() for _ in range(d)]
        colvec = self.colvec
        bd = self.bd
        by_max = self.by_max
        violations: list[tuple[tuple[str, ...], int]] = []
        checked = 0

        def add_vertex(v: int, mask: int) -> list[tuple[int, int, int]]:
            log: list[tuple[int, int, int]] = []
            for k in range(d + 1):
                for rest, i in by_max[k][v]:
                    if rest & ~mask:
                        continue
                    if k < d:
                        cnt[k] += 1
                        b = col[k].insert(colvec[k][i])
                        if b is not None:
                            log.append((0, k, b))
                    if k >= 1:
                        b = bdr[k - 1].insert(bd[k][i])
                        if b is not None:
                            log.append((1, k - 1, b))
            return log

        def undo(v: int, mask: int, log: list[tuple[int, int, int]]) -> None:
            for kind, k, b in log:
                (col if kind == 0 else bdr)[k].remove(b)
            for k in range(d + 1):
                if k < d:
                    for rest, _ in by_max[k][v]:
                        if not rest & ~mask:
                            cnt[k] -= 1

        def violations_at(mask: int) -> list[int]:
            bad = []
            for k in range(d):
                meet = cnt[k] - col[k].rank
                # B_k(Y) always sits inside C_k(Y) ∩ B_k(X)
                assert meet >= bdr[k].rank
                if meet != bdr[k].rank:
                    bad.append(k)
            return bad

        full = (1 << n) - 1

        class _Stop(Exception):
            pass

        def dfs(start: int, mask: int) -> None:
            nonlocal checked
            for v in range(start, n):
                log = add_vertex(v, mask)
                mask2 = mask | (1 << v)
                if mask2 != full:
                    checked += 1
                    for k in violations_at(mask2):
                        violations.append((self._subset_labels(mask2), k))
                        if stop_on_first:
                            raise _Stop
                dfs(v + 1, mask2)
                undo(v, mask, log)

        base_mask = 0
        for v in prefix:
            add_vertex(v, base_mask)
            base_mask |= 1 << v
        try:
            dfs(lo, base_mask)
        except _Stop:
            pass
        return checked, violations

    def check_subset(self, mask: int) -> tuple[int, list[int]]:
        """Evaluate one subset directly; returns (size, violating degrees)."""
        ids = [v for v in range(self.n) if (mask >> v) & 1]
        d = self.d
        cnt = [0] * d
        col = [_PivotSpace() for _ in range(d)]
        bdr = [_PivotSpace() for _ in range(d)]
        m = 0
        for v in ids:
            for k in range(d + 1):
                for rest, i in self.by_max[k][v]:
                    if rest & ~m:
                        continue
                    if k < d:
                        cnt[k] += 1
                        col[k].insert(self.colvec[k][i])
                    if k >= 1:
                        bdr[k - 1].insert(self.bd[k][i])
            m |= 1 << v
        bad = [k for k in range(d) if cnt[k] - col[k].rank != bdr[k].rank]
        return len(ids), bad

    def _subset_labels(self, mask: int) -> tuple[str, ...]:
        return tuple(
            self.X.vertices[v] for v in range(self.n) if (mask >> v) & 1
        )


# ------------------------------------------------------------- worker plumbing

_WORKER_ENGINE: TightnessEngine | None = None


def _init_worker(facets):
    global _WORKER_ENGINE
    _WORKER_ENGINE = TightnessEngine(SimplicialComplex(facets))


def _run_task(task):
    v1, v2, stop_on_first = task
    engine = _WORKER_ENGINE
    checked, violations = engine.scan(
        stop_on_first=stop_on_first, lo=v2 + 1, prefix=(v1, v2)
    )
    # the prefix pair itself is a subset to check
    _, bad = engine.check_subset((1 << v1) | (1 << v2))
    pair_viol = [
        (engine._subset_labels((1 << v1) | (1 << v2)), k) for k in bad
    ]
    return checked + 1, pair_viol + violations


def _scan_parallel(
    engine: TightnessEngine, jobs: int, stop_on_first: bool
) -> tuple[int, list]:
    from multiprocessing import Pool

    n = engine.n
    tasks = [
        (v1, v2, stop_on_first) for v1 in range(n) for v2 in range(v1 + 1, n)
    ]
    checked = 0
    violations: list = []
    with Pool(
        processes=jobs,
        initializer=_init_worker,
        initargs=(engine.X.facets,),
    ) as pool:
        for c, v in pool.imap_unordered(_run_task, tasks, chunksize=4):
            checked += c
            violations.extend(v)
            if violations and stop_on_first:
                pool.terminate()
                break
    # singletons handled inline (never violating on connected X, but checked)
    for v1 in range(n):
        if violations and stop_on_first:
            break
        _, bad = engine.check_subset(1 << v1)
        checked += 1
        violations.extend((engine._subset_labels(1 << v1), k) for k in bad)
    return checked, violations


# ------------------------------------------------------------------ front door

def is_tight_z2(
    X: SimplicialComplex,
    mode: str = "exhaustive",
    sample_count: int = 1000,
    seed: int = 0,
    ceiling: int = DEFAULT_EXHAUSTIVE_CEILING,
    jobs: int = 1,
    stop_on_first: bool = True,
) -> TightnessReport:
    """Scan vertex subsets for homology-injectivity violations.

    Exhaustive mode visits every subset except the empty and full one
    (requires f0 <= ceiling); sampled mode draws subsets from the seeded
    generator.  jobs > 1 splits the exhaustive scan over size-2 subset
    prefixes.
    """
    n = len(X.vertices)
    if mode == "exhaustive":
        if n > ceiling:
            raise SubsetSpaceTooLarge(
                f"{n} vertices exceed the exhaustive ceiling {ceiling}"
            )
        engine = TightnessEngine(X)
        if jobs > 1 and n >= 3:
            checked, violations = _scan_parallel(engine, jobs, stop_on_first)
        else:
            checked, violations = engine.scan(stop_on_first=stop_on_first)
        return TightnessReport(
            mode="exhaustive", checked=checked, violations=tuple(violations)
        )
    if mode != "sampled":
        raise ValueError(f"unknown mode {mode!r}")
    engine = TightnessEngine(X)
    rng = SplitMix64(seed)
    space = (1 << n) - 2
    violations = []
    checked = 0
    for _ in range(sample_count):
        mask = rng.next_below(space) + 1  # uniform over non-empty proper subsets
        checked += 1
        _, bad = engine.check_subset(mask)
        for k in bad:
            violations.append((engine._subset_labels(mask), k))
        if violations and stop_on_first:
            break
    return TightnessReport(
        mode="sampled",
        checked=checked,
        violations=tuple(violations),
        sample_count=sample_count,
        seed=seed,
    )
