"""Exact automorphism groups of edge-colored complete graphs.

Two engines: a factorial brute force used as the independent oracle at tiny
sizes, and the real one, backtracking over an equitable-partition refinement
(split cells by per-cell color incidence counts, branch on the smallest
non-singleton cell, lowest vertex first). Group order is computed exactly by
orbit-stabilizer counting along the individualization chain.
"""

from __future__ import annotations

import itertools
import os

from .cgraph import ColoredGraph
from .permgroup import PermGroup, Permutation, group_from_elements

BRUTE_FORCE_CAP = 8
_BRUTE_CAP_ENV = "CYCLICGR_BRUTE_CAP"


def is_automorphism(graph: ColoredGraph, g: Permutation) -> bool:
    """True iff g preserves every edge color."""
    if g.degree != graph.n:
        raise ValueError(f"permutation degree {g.degree} != graph size {graph.n}")
    img = g.images
    color = graph.colors
    n = graph.n
    idx = 0
    for u in range(n):
        iu = img[u]
        for v in range(u + 1, n):
            a, b = iu, img[v]
            if a > b:
                a, b = b, a
            if color[idx] != color[a * n - a * (a + 1) // 2 + (b - a - 1)]:
                return False
            idx += 1
    return True


def _brute_cap() -> int:
    env = os.environ.get(_BRUTE_CAP_ENV)
    return int(env) if env else BRUTE_FORCE_CAP


def automorphism_group_bruteforce(graph: ColoredGraph, cap: int | None = None) -> PermGroup:
    """Filter all n! permutations; exact, for cross-validation only."""
    cap = _brute_cap() if cap is None else cap
    if graph.n > cap:
        raise ValueError(f"brute force capped at n<={cap}, got n={graph.n}")
    elems = []
    for images in itertools.permutations(range(graph.n)):
        if _preserves(graph, images):
            elems.append(images)
    return group_from_elements(graph.n, elems)


def _preserves(graph: ColoredGraph, img: tuple[int, ...]) -> bool:
    color = graph.colors
    n = graph.n
    idx = 0
    for u in range(n):
        iu = img[u]
        for v in range(u + 1, n):
            a, b = iu, img[v]
            if a > b:
                a, b = b, a
            if color[idx] != color[a * n - a * (a + 1) // 2 + (b - a - 1)]:
                return False
            idx += 1
    return True


# ---------------------------------------------------------------------------
# refinement engine


def _refine(matrix: list[list[int]], cells: list[list[int]]) -> tuple[list[list[int]], tuple]:
    """Equitable refinement. Returns (cells, trace).

    Cells split by the multiset of (cell, color) incidence counts; subcells are
    emitted in sorted signature order, so two runs produce positionally aligned
    partitions exactly when their traces are equal.
    """
    n = len(matrix)
    trace = []
    while True:
        cell_id = [0] * n
        for ci, cell in enumerate(cells):
            for v in cell:
                cell_id[v] = ci
        new_cells: list[list[int]] = []
        round_keys = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                round_keys.append(None)
                continue
            buckets: dict[tuple, list[int]] = {}
            for v in cell:
                row = matrix[v]
                counts: dict[tuple[int, int], int] = {}
                for u in range(n):
                    if u == v:
                        continue
                    key = (cell_id[u], row[u])
                    counts[key] = counts.get(key, 0) + 1
                sig = tuple(sorted(counts.items()))
                buckets.setdefault(sig, []).append(v)
            keys = sorted(buckets)
            round_keys.append(tuple((kk, len(buckets[kk])) for kk in keys))
            if len(keys) > 1:
                split = True
            for kk in keys:
                new_cells.append(sorted(buckets[kk]))
        trace.append(tuple(round_keys))
        cells = new_cells
        if not split:
            break
    return cells, tuple(trace)


def _individualize(cells: list[list[int]], ci: int, v: int) -> list[list[int]]:
    rest = [u for u in cells[ci] if u != v]
    return cells[:ci] + [[v], rest] + cells[ci + 1:]


def _first_branch_cell(cells: list[list[int]]) -> int | None:
    """Smallest non-singleton cell, ties broken by lowest vertex index."""
    best = None
    best_key = None
    for ci, cell in enumerate(cells):
        if len(cell) > 1:
            key = (len(cell), cell[0])
            if best_key is None or key < best_key:
                best, best_key = ci, key
    return best


def _search_map(
    matrix: list[list[int]],
    s_cells: list[list[int]],
    t_cells: list[list[int]],
) -> Permutation | None:
    """One color-preserving bijection aligning the two partitions, or None."""
    s_cells, s_trace = _refine(matrix, s_cells)
    t_cells, t_trace = _refine(matrix, t_cells)
    if s_trace != t_trace:
        return None
    ci = _first_branch_cell(s_cells)
    if ci is None:
        n = len(matrix)
        images = [0] * n
        for sc, tc in zip(s_cells, t_cells):
            images[sc[0]] = tc[0]
        if sorted(images) != list(range(n)):
            return None
        g = Permutation(images)
        return g if _matrix_preserves(matrix, g.images) else None
    v = s_cells[ci][0]
    for w in t_cells[ci]:
        found = _search_map(
            matrix, _individualize(s_cells, ci, v), _individualize(t_cells, ci, w)
        )
        if found is not None:
            return found
    return None


def _matrix_preserves(matrix: list[list[int]], img: tuple[int, ...]) -> bool:
    n = len(matrix)
    for u in range(n):
        mu = matrix[u]
        miu = matrix[img[u]]
        for v in range(u + 1, n):
            if mu[v] != miu[img[v]]:
                return False
    return True


def _orbit_closure(v: int, gens: list[Permutation], within: set[int]) -> set[int]:
    orbit = {v}
    frontier = [v]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g.images[x]
                if y not in orbit:
                    orbit.add(y)
                    nxt.append(y)
        frontier = nxt
    if not orbit <= within:
        raise AssertionError("orbit escaped its refinement cell")
    return orbit


def _aut_from(matrix: list[list[int]], cells: list[list[int]]) -> tuple[int, list[Permutation]]:
    cells, _ = _refine(matrix, cells)
    ci = _first_branch_cell(cells)
    if ci is None:
        return 1, []
    cell = cells[ci]
    v = cell[0]
    sub_order, gens = _aut_from(matrix, _individualize(cells, ci, v))
    gens = list(gens)
    orbit = _orbit_closure(v, gens, set(cell)) if gens else {v}
    for w in cell[1:]:
        if w in orbit:
            continue
        sigma = _search_map(
            matrix, _individualize(cells, ci, v), _individualize(cells, ci, w)
        )
        if sigma is not None:
            gens.append(sigma)
            orbit = _orbit_closure(v, gens, set(cell))
    return len(orbit) * sub_order, gens


def automorphism_group(graph: ColoredGraph) -> PermGroup:
    """Exact automorphism group via refinement backtracking."""
    if graph.n == 1:
        return PermGroup(1, [], order=1)
    matrix = graph.matrix()
    order, gens = _aut_from(matrix, [list(range(graph.n))])
    for g in gens:
        if not is_automorphism(graph, g):
            raise AssertionError("search produced a non-automorphism")
    return PermGroup(graph.n, gens, order=order)


def stabilizer_is_trivial(graph: ColoredGraph, v: int, known: PermGroup | None = None) -> bool:
    """True iff the identity is the only automorphism fixing v.

    `known` is an optional already-verified subgroup of Aut used as a fast
    negative witness; the conclusion always comes from a pinned exact search.
    """
    if not 0 <= v < graph.n:
        raise ValueError("vertex out of range")
    if known is not None and known.order <= 10_000:
        for t in known.elements():
            if t[v] == v and any(t[i] != i for i in range(len(t))):
                return False
    if graph.n == 1:
        return True
    matrix = graph.matrix()
    cells = [[v], [u for u in range(graph.n) if u != v]]
    if len(cells[1]) == 0:
        cells = [[v]]
    order, _ = _aut_from(matrix, cells)
    return order == 1
