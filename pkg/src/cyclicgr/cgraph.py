"""k-edge-colored complete graphs as dense triangular color tables.

Color 0 is conventionally "missing": DOT export omits those edges, and a
2-colored graph read that way is an ordinary simple graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .permgroup import OrbitLayout


def pair_index(u: int, v: int, n: int) -> int:
    """Index of the unordered pair {u,v} (u<v) in the triangular table."""
    if u > v:
        u, v = v, u
    if u == v:
        raise ValueError("self-pairs have no entry")
    if v >= n or u < 0:
        raise ValueError(f"vertex out of range for n={n}: ({u},{v})")
    return u * n - u * (u + 1) // 2 + (v - u - 1)


def all_pairs(n: int) -> list[tuple[int, int]]:
    """All unordered pairs in triangular-table order."""
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


@dataclass(frozen=True)
class ColoredGraph:
    """Complete graph on n vertices with every edge colored from {0,..,k-1}."""

    n: int
    k: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one vertex")
        if self.k < 1:
            raise ValueError("need at least one color")
        want = self.n * (self.n - 1) // 2
        if len(self.colors) != want:
            raise ValueError(f"expected {want} pair colors, got {len(self.colors)}")
        if any(c < 0 or c >= self.k for c in self.colors):
            raise ValueError("edge color out of range")

    def color(self, u: int, v: int) -> int:
        return self.colors[pair_index(u, v, self.n)]

    def matrix(self) -> list[list[int]]:
        """Full n x n color matrix (diagonal -1); fresh copy each call."""
        m = [[-1] * self.n for _ in range(self.n)]
        idx = 0
        for u in range(self.n):
            row = m[u]
            for v in range(u + 1, self.n):
                c = self.colors[idx]
                row[v] = c
                m[v][u] = c
                idx += 1
        return m


class GraphBuilder:
    """Mutable staging area for the construction code; all edges start 0."""

    def __init__(self, n: int, k: int):
        self.n = n
        self.k = k
        self._colors = [0] * (n * (n - 1) // 2)

    def set_color(self, u: int, v: int, color: int) -> None:
        self._colors[pair_index(u, v, self.n)] = color

    def build(self) -> ColoredGraph:
        return ColoredGraph(self.n, self.k, tuple(self._colors))


def edge_color(graph: ColoredGraph, u: int, v: int) -> int:
    """Color of the unordered pair {u,v}; symmetric in its arguments."""
    return graph.color(u, v)


def i_degree(graph: ColoredGraph, v: int, color: int) -> int:
    """Number of `color`-neighbors of v."""
    if not 0 <= v < graph.n:
        raise ValueError(f"vertex {v} out of range")
    if not 0 <= color < graph.k:
        raise ValueError(f"color {color} out of range (k={graph.k})")
    return sum(1 for u in range(graph.n) if u != v and graph.color(u, v) == color)


def x_connected(graph: ColoredGraph, color_set: Iterable[int]) -> bool:
    """True iff every vertex pair is joined by a path using only those colors."""
    allowed = set(color_set)
    if not allowed.issubset(range(graph.k)):
        raise ValueError("color set not within graph colors")
    if graph.n == 1:
        return True
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for u in frontier:
            for v in range(graph.n):
                if v != u and v not in seen and graph.color(u, v) in allowed:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return len(seen) == graph.n


def spanned_subgraph(graph: ColoredGraph, vertices: Sequence[int]) -> ColoredGraph:
    """Subgraph spanned by a vertex subset, renumbered order-preservingly."""
    vs = sorted(set(vertices))
    if len(vs) < 2:
        raise ValueError("spanned subgraph needs at least 2 vertices")
    if vs[0] < 0 or vs[-1] >= graph.n:
        raise ValueError("vertex out of range")
    colors = [graph.color(u, v) for i, u in enumerate(vs) for v in vs[i + 1:]]
    return ColoredGraph(len(vs), graph.k, tuple(colors))


def to_json(graph: ColoredGraph) -> str:
    """Canonical JSON text; byte-stable under load/dump round trips."""
    payload = {"n": graph.n, "k": graph.k, "colors": list(graph.colors)}
    return json.dumps(payload, separators=(",", ":")) + "\n"


def from_json(text: str) -> ColoredGraph:
    data = json.loads(text)
    return ColoredGraph(int(data["n"]), int(data["k"]), tuple(int(c) for c in data["colors"]))


# Style palette for nonzero colors; color index c uses entry (c-1) mod 8.
DOT_PALETTE = (
    ("black", "solid"),
    ("red", "dashed"),
    ("blue", "dotted"),
    ("forestgreen", "bold"),
    ("orange", "solid"),
    ("purple", "dashed"),
    ("brown", "dotted"),
    ("gray40", "bold"),
)


def to_dot(graph: ColoredGraph, layout: OrbitLayout | None = None, name: str = "G") -> str:
    """DOT text with one undirected edge per non-zero-colored pair."""

    def label(v: int) -> str:
        return layout.label(v) if layout is not None else str(v)

    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in range(graph.n):
        lines.append(f'  "{label(v)}";')
    for u in range(graph.n):
        for v in range(u + 1, graph.n):
            c = graph.color(u, v)
            if c == 0:
                continue
            color, style = DOT_PALETTE[(c - 1) % len(DOT_PALETTE)]
            lines.append(
                f'  "{label(u)}" -- "{label(v)}" [color={color}, style={style}, tooltip="c{c}"];'
            )
    lines.append("}")
    return "\n".join(lines) + "\n"
