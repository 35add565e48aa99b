"""Witness-graph builders and negative certificates for cyclic groups of
prime power order.

Every builder is a deterministic function of the orbit structure: same spec,
same bytes. Builders reject shapes outside their regime with a pointer to the
right one; the classifier owns the dispatch.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cgraph import ColoredGraph, GraphBuilder, all_pairs
from .permgroup import CyclicSpec, PermGroup, Permutation, cyclic_group


class ShapeError(ValueError):
    """The orbit structure does not match this construction's regime."""


@dataclass(frozen=True)
class Certificate:
    """A permutation outside the target group that survives every coloring it
    is quoted against.

    kind "reflection-all-orbits": reverses each nontrivial orbit; stabilizes
    every vertex orbit and every edge orbit setwise, hence preserves every
    group-invariant coloring. kind "lifted": same, extended by the identity on
    fixed points. kind "coloring-class": preserves one concrete coloring class
    only (used by the two-orbit 2-coloring sweeps). kind "pair-swap": the
    transposition on a 2-point identity group, which preserves both colorings
    of a single edge.
    """

    sigma: Permutation
    kind: str
    description: str


def _reflection_images(layout, axes: dict[int, int], degree: int) -> list[int]:
    """j -> axis - j on each nontrivial orbit, identity elsewhere."""
    images = list(range(degree))
    for oi, (base, size) in enumerate(layout.entries):
        c = axes.get(oi, 0)
        for i in range(size):
            images[base + i] = base + (c - i) % size
    return images


def negative_certificate(spec: CyclicSpec) -> Certificate:
    """The obstruction permutation for orbit structures nothing represents.

    Single nontrivial orbit of size >= 3: reverse it about the base point.
    p=2 with 2-point orbits and exactly one larger orbit: reverse every
    nontrivial orbit about its last point. Fixed points are left alone, which
    lifts the certificate across any number of them.
    """
    sizes = spec.orbit_sizes
    r = len(sizes)
    layout = spec.layout()
    if r == 1 and sizes[0] >= 3:
        axes = {0: 0}
        what = "one-orbit-reversal"
    elif (
        spec.p == 2
        and r >= 2
        and sizes[0] >= 4
        and all(s == 2 for s in sizes[1:])
    ):
        axes = {oi: sizes[oi] - 1 for oi in range(r)}
        what = "pairs-plus-one-orbit-reversal"
    else:
        raise ShapeError(
            f"no negative certificate for {spec.describe()}: "
            "needs a single orbit of size >= 3, or p=2 pairs plus exactly one larger orbit"
        )
    sigma = Permutation(_reflection_images(layout, axes, spec.degree))
    kind = "lifted" if spec.trivial_count else "reflection-all-orbits"
    return Certificate(sigma=sigma, kind=kind, description=what)


# ---------------------------------------------------------------------------
# positive constructions


def build_two_orbit_3colored(n: int) -> ColoredGraph:
    """Two parallel n-orbits, three colors: cycle on the first orbit plus a
    straight matching in color 1, the shifted matching in color 2."""
    if n < 3:
        raise ShapeError("two-orbit 3-colored construction needs n >= 3")
    b = GraphBuilder(2 * n, 3)
    w = n  # second orbit base
    for i in range(n):
        b.set_color(i, (i + 1) % n, 1)
        b.set_color(i, w + i, 1)
        b.set_color(i, w + (i + 1) % n, 2)
    return b.build()


def build_many_orbit_2colored(n: int, r: int) -> ColoredGraph:
    """r >= 3 parallel n-orbits, two colors: cycle on orbit 1, straight
    matchings along the chain and from orbit 1 to orbit 3, one shifted
    matching from orbit 1 to orbit 2."""
    if n < 3:
        raise ShapeError("needs orbit size n >= 3")
    if r < 3:
        raise ShapeError("needs r >= 3 orbits; two orbits take three colors")
    base = [j * n for j in range(r)]
    b = GraphBuilder(n * r, 2)
    for i in range(n):
        b.set_color(base[0] + i, base[0] + (i + 1) % n, 1)
        for j in range(r - 1):
            b.set_color(base[j] + i, base[j + 1] + i, 1)
        b.set_color(base[0] + i, base[2] + i, 1)
        b.set_color(base[0] + i, base[1] + (i + 1) % n, 1)
    return b.build()


def build_prime_power_generic(spec: CyclicSpec) -> ColoredGraph:
    """Two colors for any spec whose second-largest orbit has size >= 7:
    cycle on the top orbit, the {0,1,3}-shift triple link into the second,
    then shifted matchings down the chain.

    Orbits further down may be small; any whose plain 1-degree would collide
    with the top orbit's 5 get their inside pairs filled with color 1, which
    moves them out of the way without touching the cross-orbit structure.
    """
    _require_core(spec)
    sizes = spec.orbit_sizes
    r = len(sizes)
    if r < 2:
        raise ShapeError("needs at least two nontrivial orbits")
    if sizes[1] < 7:
        raise ShapeError(
            "second-largest orbit must have size >= 7; smaller companions take "
            "the three-color or small-prime builders"
        )
    layout = spec.layout()
    b = GraphBuilder(spec.degree, 2)
    s = sizes
    for i in range(s[0]):
        b.set_color(layout.vertex(0, i), layout.vertex(0, i + 1), 1)
        for e in (0, 1, 3):
            b.set_color(layout.vertex(0, i), layout.vertex(1, i + e), 1)
    for l in range(1, r - 1):
        for h in range(s[l]):
            b.set_color(layout.vertex(l, h), layout.vertex(l + 1, h + 1), 1)
    for l in range(1, r):
        plain = 3 * s[0] // s[1] if l == 1 else s[l - 1] // s[l]
        if l < r - 1:
            plain += 1
        if plain == 5:
            base, size = layout.entries[l]
            for u in range(base, base + size):
                for v in range(u + 1, base + size):
                    b.set_color(u, v, 1)
    return b.build()


def build_two_nontrivial_3colored(spec: CyclicSpec) -> ColoredGraph:
    """Exactly two nontrivial orbits, sizes p**n and the small companion size
    (p for p in {3,5}, 4 for p=2), strictly nested. Three colors: both orbit
    cycles and the straight matching in color 1, the shifted matching in 2."""
    _require_core(spec)
    if spec.p not in (2, 3, 5):
        raise ShapeError("three-color two-orbit builder is for p in {2,3,5}")
    sizes = spec.orbit_sizes
    np_ = spec.n_p
    if len(sizes) != 2 or sizes[1] != np_:
        raise ShapeError(
            f"needs exactly two nontrivial orbits of sizes (p^n, {np_}), got {sizes}"
        )
    if sizes[0] == sizes[1]:
        raise ShapeError(
            "equal orbit sizes belong to the parallel two-orbit builder "
            "(build_two_orbit_3colored)"
        )
    big = sizes[0]
    layout = spec.layout()
    b = GraphBuilder(spec.degree, 3)
    for i in range(big):
        b.set_color(layout.vertex(0, i), layout.vertex(0, i + 1), 1)
        b.set_color(layout.vertex(0, i), layout.vertex(1, i), 1)
        b.set_color(layout.vertex(0, i), layout.vertex(1, i + 1), 2)
    for i in range(np_):
        b.set_color(layout.vertex(1, i), layout.vertex(1, i + 1), 1)
    return b.build()


def build_small_p_many_orbits(spec: CyclicSpec) -> ColoredGraph:
    """p in {2,3,5}, one big orbit and at least two companions of the small
    size, two colors: the big orbit carries the complement of its cycle, the
    chain carries straight matchings plus the 1-3 link and one shifted
    matching into orbit 2."""
    _require_core(spec)
    if spec.p not in (2, 3, 5):
        raise ShapeError("small-prime many-orbit builder is for p in {2,3,5}")
    sizes = spec.orbit_sizes
    np_ = spec.n_p
    if len(sizes) < 3:
        raise ShapeError("needs at least three nontrivial orbits")
    if any(s != np_ for s in sizes[1:]):
        raise ShapeError(f"companion orbits must all have size {np_}, got {sizes}")
    if sizes[0] < 4:
        # a 3-cycle has an empty complement, which hands the first orbit to a
        # layer swap (checked: the 3,3,3 instance has extra automorphisms);
        # equal 3-orbits belong to build_many_orbit_2colored
        raise ShapeError(
            "big orbit needs at least 4 points so its cycle complement is nonempty"
        )
    big = sizes[0]
    r = len(sizes)
    layout = spec.layout()
    b = GraphBuilder(spec.degree, 2)
    for i in range(big):
        for j in range(2, big - 1):
            if i < (i + j) % big:
                b.set_color(layout.vertex(0, i), layout.vertex(0, i + j), 1)
        b.set_color(layout.vertex(0, i), layout.vertex(1, i), 1)
        b.set_color(layout.vertex(0, i), layout.vertex(2, i), 1)
        b.set_color(layout.vertex(0, i), layout.vertex(1, i + 1), 1)
    for l in range(1, r - 1):
        for i in range(np_):
            b.set_color(layout.vertex(l, i), layout.vertex(l + 1, i), 1)
    return b.build()


def build_mixed_two_power(spec: CyclicSpec) -> ColoredGraph:
    """p=2 with 2-point orbits: at least two orbits of size >= 4 (at most one
    bigger than 4) and at least one pair orbit. Two colors."""
    _require_core(spec)
    if spec.p != 2:
        raise ShapeError("mixed builder is for p = 2")
    sizes = spec.orbit_sizes
    big_sizes = [s for s in sizes if s > 2]
    pair_count = sum(1 for s in sizes if s == 2)
    t = len(big_sizes)
    if pair_count < 1:
        raise ShapeError("needs at least one orbit of size 2")
    if t < 2:
        raise ShapeError("needs at least two orbits of size >= 4")
    if any(s != 4 for s in big_sizes[1:]):
        raise ShapeError("at most one orbit may exceed size 4")
    layout = spec.layout()
    pbase = t  # pair orbits follow the big ones in the layout
    b = GraphBuilder(spec.degree, 2)
    s1 = big_sizes[0]
    for j in range(s1):
        b.set_color(layout.vertex(0, j), layout.vertex(0, j + 1), 1)
        b.set_color(layout.vertex(0, j), layout.vertex(1, j + 1), 1)
        b.set_color(layout.vertex(0, j), layout.vertex(pbase, j), 1)
    # orbit 2 complete in color 1
    base2, size2 = layout.entries[1]
    for u in range(base2, base2 + size2):
        for v in range(u + 1, base2 + size2):
            b.set_color(u, v, 1)
    # straight chain through the size-4 orbits
    for i in range(t - 1):
        for j in range(sizes[i]):
            b.set_color(layout.vertex(i, j), layout.vertex(i + 1, j), 1)
    # second orbit to the first pair
    for j in range(4):
        b.set_color(layout.vertex(1, j), layout.vertex(pbase, j), 1)
    # last big orbit to the second pair, then the chain of pairs
    if pair_count >= 2:
        for j in range(4):
            b.set_color(layout.vertex(t - 1, j), layout.vertex(pbase + 1, j), 1)
    for i in range(1, pair_count - 1):
        for j in range(2):
            b.set_color(layout.vertex(pbase + i, j), layout.vertex(pbase + i + 1, j), 1)
    return b.build()


def build_order_two(r: int) -> ColoredGraph:
    """An order-two group on r pairs: chain the pairs into two strands joined
    by a single rung at the first pair, i.e. a path of length 2r."""
    if r < 1:
        raise ShapeError("needs at least one pair")
    b = GraphBuilder(2 * r, 2)
    b.set_color(0, 1, 1)
    for i in range(r - 1):
        b.set_color(2 * i, 2 * (i + 1), 1)
        b.set_color(2 * i + 1, 2 * (i + 1) + 1, 1)
    return b.build()


def append_trivial_orbits(graph: ColoredGraph, group: PermGroup, m: int) -> ColoredGraph:
    """Extend a witness graph by m individually-fixed vertices without new
    colors: the added vertices form a color-1 path whose first vertex is
    anchored to all of the group's first orbit.

    Pair-sized first orbits need care: anchoring a 2-point orbit closes a
    triangle whose rotations can mimic the group's own chain structure, so
    there the anchor also takes the last orbit (giving the apex a base cycle
    no added vertex can imitate), and a 2-point base with m=1 skips the
    anchor entirely (degree already separates the added point).

    The anchor sets are group-invariant, so containment of group + fixed
    points in the result's automorphisms holds by construction; exactness is
    the caller's check (the classifier verifies at desk scale and fails
    loudly).
    """
    if group.degree != graph.n:
        raise ValueError("group degree must match graph size")
    if group.order < 2:
        raise ShapeError("base group must be nontrivial")
    if m == 0:
        return graph
    if m < 0:
        raise ValueError("m must be >= 0")
    n = graph.n
    b = GraphBuilder(n + m, max(graph.k, 2))
    for (u, v) in all_pairs(n):
        c = graph.color(u, v)
        if c:
            b.set_color(u, v, c)
    orbits = group.orbits()
    anchor: list[int] = []
    if not (n == 2 and m == 1):
        anchor = list(orbits[0])
        if len(orbits[0]) == 2 and len(orbits) >= 2:
            anchor += list(orbits[-1])
    for v in anchor:
        b.set_color(v, n, 1)
    for t in range(m - 1):
        b.set_color(n + t, n + t + 1, 1)
    return b.build()


def _require_core(spec: CyclicSpec) -> None:
    if spec.trivial_count:
        raise ShapeError(
            "core builders take fixed-point-free specs; append_trivial_orbits "
            "handles the fixed points"
        )
    if not spec.exponents:
        raise ShapeError("needs at least one nontrivial orbit")


# ---------------------------------------------------------------------------
# two-orbit 2-coloring certificates


_NIE3_CLASSES: dict[int, dict[int, tuple[int, ...]]] = {
    # class id -> set of shifted-matching residues drawn in the second color
    3: {1: (), 2: (0,)},
    4: {1: (), 2: (0,), 3: (2, 3), 4: (1, 3)},
    5: {1: (), 2: (0,), 3: (2, 3), 4: (1, 4)},
}


def nie3_class_count(n: int) -> int:
    if n not in _NIE3_CLASSES:
        raise ValueError("two-orbit 2-coloring classes are tabulated for n in {3,4,5}")
    return len(_NIE3_CLASSES[n])


def nie3_class_graph(n: int, coloring_class: int) -> ColoredGraph:
    """Concrete representative of a two-orbit 2-coloring class: within-orbit
    pairs in color 0, the tabulated mixed residues in color 1, the rest 0."""
    special = _nie3_special(n, coloring_class)
    b = GraphBuilder(2 * n, 2)
    for i in range(n):
        for d in special:
            b.set_color(i, n + (i + d) % n, 1)
    return b.build()


def _nie3_special(n: int, coloring_class: int) -> tuple[int, ...]:
    classes = _NIE3_CLASSES.get(n)
    if classes is None:
        raise ValueError("n must be in {3,4,5}")
    if coloring_class not in classes:
        raise ValueError(f"coloring class must be in 1..{len(classes)} for n={n}")
    special = classes[coloring_class]
    # class 1 is "all mixed orbits alike"; color them all 1 so the graph is
    # not edgeless
    return special if special else tuple(range(n))


def two_layer_reflection(n: int, v_axis: int, w_axis: int) -> Permutation:
    """i -> v_axis - i on the first layer, j -> w_axis - j on the second."""
    images = [(v_axis - i) % n for i in range(n)] + [n + (w_axis - j) % n for j in range(n)]
    return Permutation(images)


def nie3_certificate(n: int, coloring_class: int) -> Certificate:
    """The reflection pair that preserves the given two-orbit 2-coloring class
    while lying outside the parallel cyclic group.

    For every class the matched reflection (both layers about 0) works, except
    the adjacent-residue class for n=4, which needs the axes offset by one.
    """
    special = _nie3_special(n, coloring_class)
    if n == 4 and coloring_class == 3:
        sigma = two_layer_reflection(4, 1, 2)
        kind_note = "offset-axes reflection"
    else:
        sigma = two_layer_reflection(n, 0, 0)
        kind_note = "matched reflection"
    return Certificate(
        sigma=sigma,
        kind="coloring-class",
        description=f"two-orbit 2-coloring class {coloring_class} of size n={n} ({kind_note})",
    )


def mixed_orbit_axis(n: int, special: frozenset[int]) -> int | None:
    """Axis c with c - special == special (mod n), least such, if any."""
    for c in range(n):
        if {(c - d) % n for d in special} == set(special):
            return c
    return None


def coloring_certificate_for_two_layers(
    n1: int, n2: int, special: frozenset[int]
) -> Permutation | None:
    """For parallel-style two-orbit groups (second orbit size dividing the
    first): a reflection pair preserving any coloring whose shifted-matching
    residues in one color are `special` (mod n2). None if no axis exists."""
    c = mixed_orbit_axis(n2, special)
    if c is None:
        return None
    images = [(-i) % n1 for i in range(n1)] + [n1 + (c - j) % n2 for j in range(n2)]
    return Permutation(images)


def two_layer_class_graph(n1: int, n2: int, special: frozenset[int]) -> ColoredGraph:
    """Representative 2-coloring of a two-orbit group (sizes n1 >= n2, n2
    dividing n1): mixed residues in `special` get color 1, all else 0."""
    if n1 % n2:
        raise ValueError("second orbit size must divide the first")
    b = GraphBuilder(n1 + n2, 2)
    for i in range(n1):
        for d in special:
            b.set_color(i, n1 + (i + d) % n2, 1)
    return b.build()
