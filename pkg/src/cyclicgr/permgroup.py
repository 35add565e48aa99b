"""Permutations, finite permutation groups, and the cyclic/dihedral/product
constructions the rest of the package is built on.

Everything is exact and finite. Permutations are image tuples, groups a
generating set plus a known order; full element lists are materialized only
for desk-scale orders (see DEFAULT_ELEMENT_CAP).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

DEFAULT_ELEMENT_CAP = 1_000_000


class MaterializationLimitError(RuntimeError):
    """A group is too large to list element by element."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Permutation:
    """A permutation of {0, ..., degree-1} stored by its image tuple."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a bijection on 0..{len(images) - 1}: {images!r}")
        self.images = images

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        images = list(range(degree))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:] + type(cycle)([cycle[0]])):
                images[a] = b
        return cls(images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (self * other)(x) = self(other(x))
        if self.degree != other.degree:
            raise ValueError("degree mismatch in composition")
        o = other.images
        s = self.images
        return Permutation(s[o[i]] for i in range(len(s)))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images):
            inv[v] = i
        return Permutation(inv)

    @property
    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    def apply_pair(self, u: int, v: int) -> tuple[int, int]:
        a, b = self.images[u], self.images[v]
        return (a, b) if a < b else (b, a)

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, sorted."""
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()}, degree={self.degree})"


class PermGroup:
    """A permutation group given by generators and its (known) order.

    Immutable by convention; the element list is materialized lazily and only
    below a configurable cap.
    """

    __slots__ = ("degree", "generators", "order", "_elements")

    def __init__(self, degree: int, generators: Iterable[Permutation], order: int | None = None):
        if degree < 1:
            raise ValueError("degree must be positive")
        gens = tuple(g for g in generators if not g.is_identity)
        for g in gens:
            if g.degree != degree:
                raise ValueError("generator degree mismatch")
        self.degree = degree
        self.generators = gens
        self._elements: frozenset[tuple[int, ...]] | None = None
        if order is None:
            self._elements = self._close(DEFAULT_ELEMENT_CAP)
            order = len(self._elements)
        self.order = order

    def _close(self, cap: int) -> frozenset[tuple[int, ...]]:
        ident = tuple(range(self.degree))
        seen = {ident}
        frontier = [ident]
        gens = [g.images for g in self.generators]
        while frontier:
            nxt = []
            for t in frontier:
                for g in gens:
                    prod = tuple(g[t[i]] for i in range(self.degree))
                    if prod not in seen:
                        seen.add(prod)
                        if len(seen) > cap:
                            raise MaterializationLimitError(
                                f"group order exceeds materialization cap {cap}"
                            )
                        nxt.append(prod)
            frontier = nxt
        return frozenset(seen)

    def elements(self, cap: int = DEFAULT_ELEMENT_CAP) -> frozenset[tuple[int, ...]]:
        """All elements as image tuples; raises beyond `cap`."""
        if self._elements is None:
            if self.order > cap:
                raise MaterializationLimitError(
                    f"order {self.order} exceeds materialization cap {cap}"
                )
            self._elements = self._close(cap)
            if len(self._elements) != self.order:
                raise AssertionError(
                    f"declared order {self.order} != materialized {len(self._elements)}"
                )
        return self._elements

    def element_perms(self, cap: int = DEFAULT_ELEMENT_CAP) -> list[Permutation]:
        return [Permutation(t) for t in sorted(self.elements(cap))]

    def orbits(self) -> list[list[int]]:
        """Vertex orbits, largest first, ties by least point."""
        parent = list(range(self.degree))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.generators:
            for i, v in enumerate(g.images):
                ri, rv = find(i), find(v)
                if ri != rv:
                    parent[rv] = ri
        buckets: dict[int, list[int]] = {}
        for v in range(self.degree):
            buckets.setdefault(find(v), []).append(v)
        out = sorted(buckets.values(), key=lambda o: (-len(o), o[0]))
        return out

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order}, gens={len(self.generators)})"


def _reduce_generators(degree: int, elements: Iterable[tuple[int, ...]]) -> list[Permutation]:
    """Greedy small generating set for an explicit element list."""
    ident = tuple(range(degree))
    todo = sorted(t for t in elements if t != ident)
    gens: list[Permutation] = []
    span = {ident}
    for t in todo:
        if t in span:
            continue
        gens.append(Permutation(t))
        # re-close
        frontier = list(span)
        span = set(span)
        gimg = [g.images for g in gens]
        while frontier:
            nxt = []
            for s in frontier:
                for g in gimg:
                    prod = tuple(g[s[i]] for i in range(degree))
                    if prod not in span:
                        span.add(prod)
                        nxt.append(prod)
            frontier = nxt
    return gens


def group_from_elements(degree: int, elements: Iterable[tuple[int, ...]]) -> PermGroup:
    elems = frozenset(elements)
    gens = _reduce_generators(degree, elems)
    grp = PermGroup(degree, gens, order=len(elems))
    grp._elements = elems
    return grp


@dataclass(frozen=True)
class CyclicSpec:
    """A cyclic permutation group of prime power order, described by its
    orbit structure: orbit j has cardinality p**exponents[j], plus
    `trivial_count` fixed points.
    """

    p: int
    exponents: tuple[int, ...] = ()
    trivial_count: int = 0

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        exps = tuple(sorted(self.exponents, reverse=True))
        object.__setattr__(self, "exponents", exps)
        if any(e < 1 for e in exps):
            raise ValueError("orbit exponents must be >= 1")
        if self.trivial_count < 0:
            raise ValueError("trivial_count must be >= 0")
        if self.degree < 1:
            raise ValueError("total degree must be >= 1")

    @classmethod
    def from_orbit_sizes(cls, p: int, sizes: Sequence[int], trivial_count: int = 0) -> "CyclicSpec":
        exps = []
        for s in sizes:
            e = 0
            m = s
            while m % p == 0 and m > 1:
                m //= p
                e += 1
            if m != 1 or e < 1:
                raise ValueError(f"orbit size {s} is not a power of {p} (>= {p})")
            exps.append(e)
        return cls(p=p, exponents=tuple(exps), trivial_count=trivial_count)

    @property
    def n(self) -> int:
        """Largest exponent (0 for a pure identity group)."""
        return self.exponents[0] if self.exponents else 0

    @property
    def order(self) -> int:
        return self.p ** self.n

    @property
    def orbit_sizes(self) -> tuple[int, ...]:
        return tuple(self.p ** e for e in self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.orbit_sizes) + self.trivial_count

    @property
    def n_p(self) -> int:
        """Small-prime companion orbit size: p itself for p in {3,5}, 4 for p=2."""
        if self.p in (3, 5):
            return self.p
        if self.p == 2:
            return 4
        raise ValueError(f"n_p is defined only for p in {{2,3,5}}, got p={self.p}")

    def layout(self) -> "OrbitLayout":
        entries = []
        base = 0
        for s in self.orbit_sizes:
            entries.append((base, s))
            base += s
        return OrbitLayout(entries=tuple(entries), trivial_base=base, degree=self.degree)

    def key(self) -> tuple:
        return (self.p, self.exponents, self.trivial_count)

    def describe(self) -> str:
        sizes = ",".join(str(s) for s in self.orbit_sizes)
        return f"p={self.p} orbits=[{sizes}] fixed={self.trivial_count}"


@dataclass(frozen=True)
class OrbitLayout:
    """Contiguous vertex numbering: nontrivial orbits first (sizes
    non-increasing), fixed points last; vertex i of orbit j is base_j + i.
    """

    entries: tuple[tuple[int, int], ...]
    trivial_base: int
    degree: int

    def vertex(self, orbit_index: int, i: int) -> int:
        base, size = self.entries[orbit_index]
        return base + (i % size)

    def orbit_of(self, v: int) -> int | None:
        """Index of the nontrivial orbit containing v, None for fixed points."""
        for j, (base, size) in enumerate(self.entries):
            if base <= v < base + size:
                return j
        return None

    def label(self, v: int) -> str:
        j = self.orbit_of(v)
        if j is None:
            return f"f_{v - self.trivial_base}"
        base, _ = self.entries[j]
        return f"v^{j + 1}_{v - base}"


def cyclic_group(spec: CyclicSpec) -> PermGroup:
    """The group generated by the permutation that advances every nontrivial
    orbit cyclically by one and fixes the trivial points."""
    layout = spec.layout()
    images = list(range(spec.degree))
    for base, size in layout.entries:
        for i in range(size):
            images[base + i] = base + (i + 1) % size
    gen = Permutation(images)
    order = spec.order if spec.exponents else 1
    return PermGroup(spec.degree, [gen] if not gen.is_identity else [], order=order)


def dihedral_group(n: int) -> PermGroup:
    """Symmetries of an n-cycle on points 0..n-1: rotation plus reflection."""
    if n < 3:
        raise ValueError("dihedral group needs n >= 3")
    rot = Permutation([(i + 1) % n for i in range(n)])
    refl = Permutation([(-i) % n for i in range(n)])
    return PermGroup(n, [rot, refl], order=2 * n)


def direct_sum(a: PermGroup, b: PermGroup) -> PermGroup:
    """Componentwise action on the disjoint union of the two point sets."""
    d = a.degree + b.degree
    gens = []
    for g in a.generators:
        gens.append(Permutation(list(g.images) + list(range(a.degree, d))))
    for g in b.generators:
        gens.append(Permutation(list(range(a.degree)) + [a.degree + x for x in g.images]))
    return PermGroup(d, gens, order=a.order * b.order)


def parallel_product(a: PermGroup, r: int) -> PermGroup:
    """The same group acting identically on r disjoint copies of its points."""
    if r < 1:
        raise ValueError("parallel product needs r >= 1")
    d = a.degree * r
    gens = []
    for g in a.generators:
        images = []
        for c in range(r):
            images.extend(c * a.degree + g.images[i] for i in range(a.degree))
        gens.append(Permutation(images))
    return PermGroup(d, gens, order=a.order)


def group_equals(a: PermGroup, b: PermGroup, cap: int = DEFAULT_ELEMENT_CAP) -> bool:
    if a.degree != b.degree:
        raise ValueError("cannot compare groups of different degree")
    if a.order != b.order:
        return False
    return a.elements(cap) == b.elements(cap)


def contains(group: PermGroup, g: Permutation, cap: int = DEFAULT_ELEMENT_CAP) -> bool:
    if group.degree != g.degree:
        raise ValueError("degree mismatch")
    return g.images in group.elements(cap)
