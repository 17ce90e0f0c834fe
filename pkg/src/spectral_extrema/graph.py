"""Immutable simple graphs on at most 62 vertices.

Adjacency is stored as one integer bitmask per vertex.  Vertex sets are
plain integer bitmasks as well; :func:`as_mask` accepts either a mask or an
iterable of vertex indices.
"""
from __future__ import annotations

import json
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

MAX_VERTICES = 62

VertexSet = int


class CapacityError(ValueError):
    """Raised when a graph would exceed :data:`MAX_VERTICES`."""


def as_mask(vertices: int | Iterable[int]) -> VertexSet:
    if isinstance(vertices, int):
        return vertices
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _check_capacity(n: int) -> None:
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    if n > MAX_VERTICES:
        raise CapacityError(f"{n} vertices exceeds the cap of {MAX_VERTICES}")


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_capacity(self.n)
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full or row >> u & 1:
                raise ValueError(f"bad adjacency row for vertex {u}")
            for v in members(row):
                if not self.adj[v] >> u & 1:
                    raise ValueError(f"asymmetric adjacency at ({u}, {v})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        _check_capacity(n)
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int = 0) -> Graph:
        _check_capacity(n)
        return cls(n, (0,) * n)

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, u: int) -> list[int]:
        return members(self.adj[u])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in members(self.adj[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if not self.adj[u] >> v & 1:
                    yield u, v

    @property
    def vertex_mask(self) -> VertexSet:
        return (1 << self.n) - 1

    def edges_within(self, s: VertexSet) -> int:
        """e(S): number of edges with both ends in ``s``."""
        return sum((self.adj[u] & s).bit_count() for u in members(s)) // 2

    def edges_between(self, s: VertexSet, t: VertexSet) -> int:
        """e(S, T) for disjoint ``s`` and ``t``."""
        if s & t:
            raise ValueError("edges_between expects disjoint vertex sets")
        return sum((self.adj[u] & t).bit_count() for u in members(s))

    def components(self) -> list[VertexSet]:
        """Connected components as masks, ordered by lowest vertex."""
        seen = 0
        comps = []
        for start in range(self.n):
            if seen >> start & 1:
                continue
            comp = frontier = 1 << start
            while frontier:
                nxt = 0
                for u in members(frontier):
                    nxt |= self.adj[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def isolated(self) -> VertexSet:
        return as_mask(u for u in range(self.n) if not self.adj[u])

    def to_numpy(self):
        import numpy as np

        a = np.zeros((self.n, self.n), dtype=float)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1.0
        return a

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "edges": [list(e) for e in self.edges()]})

    @classmethod
    def from_json(cls, text: str | dict) -> Graph:
        data = json.loads(text) if isinstance(text, str) else text
        return cls.from_edges(int(data["n"]), (tuple(e) for e in data["edges"]))


def join(g: Graph, h: Graph) -> Graph:
    """G ∨ H: disjoint union plus every edge between the two sides."""
    n = g.n + h.n
    _check_capacity(n)
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    rows = [row | hmask for row in g.adj] + [(row << g.n) | gmask for row in h.adj]
    return Graph(n, tuple(rows))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    _check_capacity(n)
    return Graph(n, g.adj + tuple(row << g.n for row in h.adj))


def induced_with_map(g: Graph, s: int | Iterable[int]) -> tuple[Graph, list[int]]:
    """G[S] with vertices renumbered in ascending original order.

    Returns the subgraph and the list mapping new index -> original index.
    """
    mask = as_mask(s)
    if mask & ~g.vertex_mask:
        raise ValueError("vertex set is not contained in the graph")
    index = members(mask)
    pos = {v: i for i, v in enumerate(index)}
    rows = []
    for v in index:
        row = 0
        for w in members(g.adj[v] & mask):
            row |= 1 << pos[w]
        rows.append(row)
    return Graph(len(index), tuple(rows)), index


def induced(g: Graph, s: int | Iterable[int]) -> Graph:
    return induced_with_map(g, s)[0]


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v or not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"invalid vertex pair ({u}, {v})")
    if g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) already present")
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, tuple(rows))


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v or not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"invalid vertex pair ({u}, {v})")
    if not g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) not present")
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def add_vertices(g: Graph, count: int) -> Graph:
    _check_capacity(g.n + count)
    return Graph(g.n + count, g.adj + (0,) * count)


def drop_isolated(g: Graph) -> Graph:
    iso = g.isolated()
    if not iso:
        return g
    return induced(g, g.vertex_mask & ~iso)


def relabel(g: Graph, order: list[int]) -> Graph:
    """Graph whose vertex ``i`` is vertex ``order[i]`` of ``g``."""
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    rows = [0] * g.n
    for i, v in enumerate(order):
        row = 0
        for w in members(g.adj[v]):
            row |= 1 << pos[w]
        rows[i] = row
    return Graph(g.n, tuple(rows))


def twin_classes(g: Graph, within: VertexSet | None = None) -> list[int]:
    """Label each vertex by its twin class inside ``within`` (default: all).

    Two vertices are twins when they have the same open or the same closed
    neighbourhood; swapping them is an automorphism fixing everything else.
    Vertices outside ``within`` get label -1.
    """
    scope = g.vertex_mask if within is None else within
    labels = [-1] * g.n
    by_open: dict[int, int] = {}
    by_closed: dict[int, int] = {}
    next_label = 0
    for v in members(scope):
        nb = g.adj[v] & scope
        closed = nb | (1 << v)
        if nb in by_open:
            labels[v] = by_open[nb]
        elif closed in by_closed:
            labels[v] = by_closed[closed]
        else:
            labels[v] = next_label
            by_open[nb] = next_label
            by_closed[closed] = next_label
            next_label += 1
    return labels
