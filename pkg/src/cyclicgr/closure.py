"""Edge-orbit machinery and the independent membership oracle.

A group is representable by some edge-colored complete graph exactly when it
equals the automorphism group of the graph that gives each of its edge orbits
a distinct color (its 2*-closure); that equality is what this module checks.
Membership in the k-color class is decided by enumerating colorings of the
edge orbits up to color renaming, i.e. set partitions of the orbit ids into
at most k blocks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator

from .autsearch import automorphism_group
from .cgraph import ColoredGraph, all_pairs, pair_index
from .permgroup import PermGroup, Permutation

DEFAULT_PARTITION_BUDGET = 200_000
DEFAULT_SAMPLE_COUNT = 50_000
DEFAULT_SEED = 20240901


class EnumerationBudgetError(RuntimeError):
    """Raised when a membership query cannot be decided within its budget.

    Deliberately distinct from a negative answer: the oracle never reports
    false because it ran out of budget.
    """


class NotInGRType:
    """Sentinel verdict for groups that no edge-colored graph represents."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NotInGR"


NOT_IN_GR = NotInGRType()


@dataclass(frozen=True)
class EdgeOrbitPartition:
    """Partition of the unordered vertex pairs under the induced group action.

    Orbit ids are contiguous and assigned by smallest representative pair in
    triangular-table order.
    """

    degree: int
    orbit_of_pair: tuple[int, ...]
    count: int
    representatives: tuple[tuple[int, int], ...]

    def orbit_id(self, u: int, v: int) -> int:
        return self.orbit_of_pair[pair_index(u, v, self.degree)]


def edge_orbits(group: PermGroup) -> EdgeOrbitPartition:
    n = group.degree
    pairs = all_pairs(n)
    orbit_of = [-1] * len(pairs)
    reps: list[tuple[int, int]] = []
    gens = [g.images for g in group.generators]
    for start, (u0, v0) in enumerate(pairs):
        if orbit_of[start] != -1:
            continue
        oid = len(reps)
        reps.append((u0, v0))
        orbit_of[start] = oid
        frontier = [(u0, v0)]
        while frontier:
            nxt = []
            for (u, v) in frontier:
                for g in gens:
                    a, b = g[u], g[v]
                    if a > b:
                        a, b = b, a
                    pi = pair_index(a, b, n)
                    if orbit_of[pi] == -1:
                        orbit_of[pi] = oid
                        nxt.append((a, b))
            frontier = nxt
    return EdgeOrbitPartition(
        degree=n,
        orbit_of_pair=tuple(orbit_of),
        count=len(reps),
        representatives=tuple(reps),
    )


def rainbow_graph(group: PermGroup) -> ColoredGraph:
    """Each edge orbit in its own color."""
    part = edge_orbits(group)
    k = max(part.count, 1)
    return ColoredGraph(group.degree, k, part.orbit_of_pair)


def two_star_closure(group: PermGroup) -> PermGroup:
    """Automorphism group of the rainbow graph; always contains the input."""
    if group.degree == 1:
        return PermGroup(1, [], order=1)
    closure = automorphism_group(rainbow_graph(group))
    if group.order > closure.order:
        raise AssertionError("closure smaller than its group")
    return closure


def coloring_graph(part: EdgeOrbitPartition, coloring: tuple[int, ...]) -> ColoredGraph:
    """Realize an orbit coloring as a concrete colored graph."""
    k = max(coloring) + 1 if coloring else 1
    colors = tuple(coloring[o] for o in part.orbit_of_pair)
    return ColoredGraph(part.degree, k, colors)


@dataclass
class MembershipReport:
    """Outcome of one k-color membership query."""

    degree: int
    group_order: int
    k: int
    member: bool
    witness_coloring: dict[int, int] | None = None
    extra_automorphism: Permutation | None = None
    extra_for_coloring: dict[int, int] | None = None
    colorings_examined: int = 0
    exhaustive: bool = False

    def to_jsonable(self) -> dict:
        return {
            "degree": self.degree,
            "group_order": self.group_order,
            "k": self.k,
            "member": self.member,
            "witness_coloring": self.witness_coloring,
            "extra_automorphism": (
                self.extra_automorphism.cycle_string() if self.extra_automorphism else None
            ),
            "extra_for_coloring": self.extra_for_coloring,
            "colorings_examined": self.colorings_examined,
            "exhaustive": self.exhaustive,
        }


def partitions_up_to(m: int, k: int) -> int:
    """Number of set partitions of m labeled items into at most k blocks."""
    if m == 0:
        return 1
    # S(i, j) table
    table = [[0] * (k + 1) for _ in range(m + 1)]
    table[0][0] = 1
    for i in range(1, m + 1):
        for j in range(1, min(i, k) + 1):
            table[i][j] = table[i - 1][j - 1] + j * table[i - 1][j]
    return sum(table[m][j] for j in range(k + 1)) if m else 1


def _rgs_iter(m: int, k: int) -> Iterator[tuple[int, ...]]:
    """Restricted growth strings of length m with values < k, lex order."""
    if m == 0:
        yield ()
        return
    a = [0] * m
    maxes = [0] * m  # maxes[i] = max(a[0..i-1])
    i = m - 1
    yield tuple(a)
    while True:
        # increment position i if allowed, else backtrack
        while i > 0:
            if a[i] < min(maxes[i] + 1, k - 1):
                a[i] += 1
                for j in range(i + 1, m):
                    a[j] = 0
                    maxes[j] = max(maxes[j - 1], a[j - 1])
                yield tuple(a)
                i = m - 1
                break
            i -= 1
        else:
            return


class _ExtraCache:
    """Adaptive store of known non-group automorphisms.

    Every entry was produced by the exact engine for some earlier coloring and
    verified to lie outside the target group; rejecting a new coloring through
    the cache therefore stays conclusive, it just skips the engine.
    """

    def __init__(self, n: int, orbit_of_pair: tuple[int, ...]):
        self.n = n
        self.orbit_of_pair = orbit_of_pair
        self.pairs = all_pairs(n)
        self.entries: list[tuple[tuple[int, ...], Permutation]] = []

    def add(self, g: Permutation) -> None:
        n = self.n
        img = g.images
        mapped = []
        for (u, v) in self.pairs:
            a, b = img[u], img[v]
            if a > b:
                a, b = b, a
            mapped.append(pair_index(a, b, n))
        self.entries.append((tuple(mapped), g))

    def killer(self, coloring: tuple[int, ...]) -> Permutation | None:
        """An already-known extra preserving this orbit coloring, if any."""
        orb = self.orbit_of_pair
        for mapped, g in self.entries:
            ok = True
            for i, mi in enumerate(mapped):
                if coloring[orb[i]] != coloring[orb[mi]]:
                    ok = False
                    break
            if ok:
                return g
        return None


def _canonical_coloring(raw: tuple[int, ...]) -> tuple[int, ...]:
    """Rename colors by first occurrence so equivalent colorings coincide."""
    mapping: dict[int, int] = {}
    out = []
    for c in raw:
        if c not in mapping:
            mapping[c] = len(mapping)
        out.append(mapping[c])
    return tuple(out)


def gr_k_membership(
    group: PermGroup,
    k: int,
    budget: int = DEFAULT_PARTITION_BUDGET,
    samples: int = DEFAULT_SAMPLE_COUNT,
    seed: int = DEFAULT_SEED,
    cache: _ExtraCache | None = None,
) -> MembershipReport:
    """Is the group the automorphism group of some at-most-k-colored graph?

    Colorings are enumerated up to color renaming (set partitions of the edge
    orbit ids). When the partition count exceeds `budget` the query falls back
    to seeded sampling: a sampled witness still proves membership, but a
    negative can then no longer be certified and EnumerationBudgetError is
    raised instead.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    n = group.degree
    part = edge_orbits(group)
    m = part.count
    group_elems = group.elements()
    if cache is None:
        cache = _ExtraCache(n, part.orbit_of_pair)

    report = MembershipReport(degree=n, group_order=group.order, k=k, member=False)

    def check(coloring: tuple[int, ...]) -> bool:
        """True iff this coloring is a witness; records evidence on report."""
        report.colorings_examined += 1
        known = cache.killer(coloring)
        if known is not None:
            if report.extra_automorphism is None:
                report.extra_automorphism = known
                report.extra_for_coloring = dict(enumerate(coloring))
            return False
        graph = coloring_graph(part, coloring)
        aut = automorphism_group(graph)
        if aut.order == group.order:
            report.member = True
            report.witness_coloring = dict(enumerate(coloring))
            return True
        extra = next(g for g in aut.generators if g.images not in group_elems)
        cache.add(extra)
        if report.extra_automorphism is None:
            report.extra_automorphism = extra
            report.extra_for_coloring = dict(enumerate(coloring))
        return False

    total = partitions_up_to(m, k)
    if total <= budget:
        for coloring in _rgs_iter(m, k):
            if check(coloring):
                return report
        report.exhaustive = True
        return report

    # Too many colorings to sweep: hunt for a witness by seeded sampling.
    rng = random.Random(seed)
    seen: set[tuple[int, ...]] = set()
    for _ in range(samples):
        raw = tuple(rng.randrange(k) for _ in range(m))
        coloring = _canonical_coloring(raw)
        if coloring in seen:
            continue
        seen.add(coloring)
        if check(coloring):
            return report
    raise EnumerationBudgetError(
        f"{total} colorings of {m} edge orbits exceed budget {budget} "
        f"and {samples} samples found no witness (k={k})"
    )


def min_colors(
    group: PermGroup,
    k_max: int,
    budget: int = DEFAULT_PARTITION_BUDGET,
    samples: int = DEFAULT_SAMPLE_COUNT,
    seed: int = DEFAULT_SEED,
):
    """Least k <= k_max whose membership holds, or NOT_IN_GR.

    The closure test settles non-membership first, so enumeration only ever
    runs for groups that some coloring does represent.
    """
    if group.degree == 1:
        return 1
    closure = two_star_closure(group)
    if closure.order != group.order:
        return NOT_IN_GR
    part = edge_orbits(group)
    cache = _ExtraCache(group.degree, part.orbit_of_pair)
    for k in range(1, k_max + 1):
        report = gr_k_membership(
            group, k, budget=budget, samples=samples, seed=seed, cache=cache
        )
        if report.member:
            return k
    raise EnumerationBudgetError(
        f"group of order {group.order} is 2*-closed but no witness found with "
        f"k <= {k_max}"
    )
