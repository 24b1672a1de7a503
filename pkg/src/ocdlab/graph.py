"""Simple undirected graphs, vertex colorings, and the graph file format.

Vertices are dense integers ``0..n-1`` internally.  Files use 1-based
vertex identifiers (DIMACS convention):

    c <comment>            ignored
    p ocd <n> <m>          exactly one, first non-comment line
    e <u> <v>              one per edge, 1 <= u,v <= n, u != v
    n <v> <color>          colored files only, one per vertex, colors >= 1

Duplicate edge lines collapse silently to a single edge.  Serialization
emits edges sorted lexicographically, so parse/serialize round-trips are
the identity on the adjacency structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ColoringError, GraphFormatError

__all__ = [
    "Graph",
    "ColoredGraph",
    "as_vertex_set",
    "induced_subgraph",
    "is_connected",
    "parse_graph",
    "parse_colored_graph",
    "serialize_graph",
    "serialize_colored_graph",
]


@dataclass(frozen=True, repr=False)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(self.adj) != self.n:
            raise ValueError("adjacency must have one entry per vertex")
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise ValueError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbor {u} of {v} out of range")
                if v not in self.adj[u]:
                    raise ValueError(f"adjacency not symmetric at {u}-{v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge iterable, collapsing duplicates."""
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            sets[u].add(v)
            sets[v].add(u)
        return cls(n, tuple(frozenset(s) for s in sets))

    @property
    def m(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted lexicographically."""
        return sorted((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def bit_rows(self) -> list[int]:
        """Adjacency as one int bitmask per vertex (bit u set iff u adjacent)."""
        rows = [0] * self.n
        for u in range(self.n):
            r = 0
            for v in self.adj[u]:
                r |= 1 << v
            rows[u] = r
        return rows

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True, repr=False)
class ColoredGraph:
    """A graph plus a coloring whose classes partition the vertices.

    ``colors[v]`` is the class of vertex ``v``, in ``1..k`` where
    ``k = max(colors)``.  Every class must be nonempty and must be an
    independent set.
    """

    graph: Graph
    colors: tuple[int, ...]

    def __post_init__(self):
        g = self.graph
        if len(self.colors) != g.n:
            raise ColoringError("need exactly one color per vertex")
        k = max(self.colors, default=0)
        for v, c in enumerate(self.colors):
            if c < 1:
                raise ColoringError(f"vertex {v} has invalid color {c}")
        present = set(self.colors)
        for c in range(1, k + 1):
            if c not in present:
                raise ColoringError(f"color class {c} is empty")
        for u, v in g.edges():
            if self.colors[u] == self.colors[v]:
                raise ColoringError(
                    f"edge ({u}, {v}) is monochromatic (color {self.colors[u]})"
                )

    @property
    def k(self) -> int:
        return max(self.colors, default=0)

    def color_of(self, v: int) -> int:
        return self.colors[v]

    def classes(self) -> tuple[tuple[int, ...], ...]:
        """Color classes in ascending vertex order; index i holds class i+1."""
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            out[c - 1].append(v)
        return tuple(tuple(cls) for cls in out)

    def __repr__(self) -> str:
        return f"ColoredGraph(n={self.graph.n}, m={self.graph.m}, k={self.k})"


def as_vertex_set(g: Graph, members: Iterable[int]) -> frozenset[int]:
    """Normalize an iterable of vertices, rejecting out-of-range members."""
    s = frozenset(members)
    for v in s:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for graph with n={g.n}")
    return s


def induced_subgraph(g: Graph, members: Iterable[int]) -> Graph:
    """Subgraph induced on ``members``, relabeled 0..|members|-1.

    The relabeling preserves the relative order of the kept vertices.  An
    empty selection yields the 0-vertex graph.
    """
    keep = sorted(as_vertex_set(g, members))
    index = {v: i for i, v in enumerate(keep)}
    edges = [
        (index[u], index[v])
        for u in keep
        for v in g.adj[u]
        if u < v and v in index
    ]
    return Graph.from_edges(len(keep), edges)


def is_connected(g: Graph) -> bool:
    """True iff every vertex pair is joined by a path.

    The 0-vertex and 1-vertex graphs count as connected, so removing an
    entire graph leaves a connected remainder by convention.
    """
    if g.n <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        for u in g.adj[stack.pop()]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == g.n


def _scan(text: str, *, colored: bool):
    n = m = None
    edges: list[tuple[int, int]] = []
    colors: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        fields = raw.split()
        if not fields or fields[0] == "c":
            continue
        tag = fields[0]
        if tag == "p":
            if n is not None:
                raise GraphFormatError(lineno, "duplicate problem line")
            if len(fields) != 4 or fields[1] != "ocd":
                raise GraphFormatError(lineno, "expected 'p ocd <n> <m>'")
            try:
                n, m = int(fields[2]), int(fields[3])
            except ValueError:
                raise GraphFormatError(lineno, "non-integer counts in problem line")
            if n < 0 or m < 0:
                raise GraphFormatError(lineno, "negative counts in problem line")
        elif tag == "e":
            if n is None:
                raise GraphFormatError(lineno, "edge line before problem line")
            if len(fields) != 3:
                raise GraphFormatError(lineno, "expected 'e <u> <v>'")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphFormatError(lineno, "non-integer vertex in edge line")
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(lineno, f"vertex out of range 1..{n}")
            if u == v:
                raise GraphFormatError(lineno, f"self-loop at vertex {u}")
            edges.append((u - 1, v - 1))
        elif tag == "n":
            if not colored:
                raise GraphFormatError(lineno, "color line in a plain graph file")
            if n is None:
                raise GraphFormatError(lineno, "color line before problem line")
            if len(fields) != 3:
                raise GraphFormatError(lineno, "expected 'n <v> <color>'")
            try:
                v, c = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphFormatError(lineno, "non-integer value in color line")
            if not 1 <= v <= n:
                raise GraphFormatError(lineno, f"vertex out of range 1..{n}")
            if c < 1:
                raise GraphFormatError(lineno, f"color must be >= 1, got {c}")
            if v - 1 in colors:
                raise GraphFormatError(lineno, f"duplicate color line for vertex {v}")
            colors[v - 1] = c
        else:
            raise GraphFormatError(lineno, f"unrecognized line type {tag!r}")
    if n is None:
        raise GraphFormatError(None, "no problem line found")
    if len(edges) != m:
        raise GraphFormatError(
            None, f"problem line declares {m} edges, file has {len(edges)}"
        )
    return n, edges, colors


def parse_graph(text: str) -> Graph:
    """Parse the plain graph format."""
    n, edges, _ = _scan(text, colored=False)
    return Graph.from_edges(n, edges)


def parse_colored_graph(text: str) -> ColoredGraph:
    """Parse the colored graph format and validate all coloring invariants."""
    n, edges, colors = _scan(text, colored=True)
    for v in range(n):
        if v not in colors:
            raise ColoringError(f"vertex {v + 1} has no color line")
    g = Graph.from_edges(n, edges)
    tup = tuple(colors[v] for v in range(n))
    k = max(tup, default=0)
    present = set(tup)
    for c in range(1, k + 1):
        if c not in present:
            raise ColoringError(f"color class {c} is empty (colors must be 1..k)")
    for u, v in g.edges():
        if tup[u] == tup[v]:
            raise ColoringError(
                f"monochromatic edge ({u + 1}, {v + 1}) with color {tup[u]}"
            )
    return ColoredGraph(g, tup)


def serialize_graph(g: Graph) -> str:
    lines = [f"p ocd {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def serialize_colored_graph(cg: ColoredGraph) -> str:
    g = cg.graph
    lines = [f"p ocd {g.n} {g.m}"]
    lines.extend(f"n {v + 1} {cg.colors[v]}" for v in range(g.n))
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
