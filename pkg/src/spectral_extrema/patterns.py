"""Forbidden-subgraph detection (non-induced containment).

Each family has a specialised detector; :func:`generic_subiso` is an
exhaustive backtracking matcher used as the reference oracle.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from . import families, graph6
from .graph import Graph, members, twin_classes
from .matching import max_matching
from .paths import DP_CAP, CapabilityError, find_cycle, find_path, find_theta, longest_cycle, longest_path_order

__all__ = [
    "CapabilityError", "PatternSpec", "Witness", "parse_pattern", "contains",
    "neighborhood_longest_path", "neighborhood_max_matching", "book_width",
    "longest_cycle", "odd_girth", "odd_girth_check", "generic_subiso", "is_free",
]

KINDS = ("fan", "friendship", "theta", "book", "cycle", "clique", "oddfree", "generic")


@dataclass(frozen=True)
class PatternSpec:
    kind: str
    params: tuple[int, ...] = ()
    graph: Graph | None = None   # only for kind == "generic"

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown pattern kind {self.kind!r}")
        if self.kind == "generic":
            if self.graph is None:
                raise ValueError("generic pattern needs a graph")
        elif self.kind != "oddfree":
            self.pattern_graph()   # validates parameters
        elif len(self.params) != 1 or self.params[0] < 1:
            raise ValueError("oddfree pattern needs one parameter k >= 1")

    @classmethod
    def fan(cls, k: int) -> PatternSpec:
        return cls("fan", (k,))

    @classmethod
    def friendship(cls, k: int) -> PatternSpec:
        return cls("friendship", (k,))

    @classmethod
    def theta(cls, t: int, p: int, q: int) -> PatternSpec:
        return cls("theta", (t, p, q))

    @classmethod
    def book(cls, r: int) -> PatternSpec:
        return cls("book", (r,))

    @classmethod
    def cycle(cls, t: int) -> PatternSpec:
        return cls("cycle", (t,))

    @classmethod
    def clique(cls, r: int) -> PatternSpec:
        return cls("clique", (r,))

    @classmethod
    def oddfree(cls, k: int) -> PatternSpec:
        return cls("oddfree", (k,))

    @classmethod
    def generic(cls, g: Graph) -> PatternSpec:
        return cls("generic", (), g)

    def pattern_graph(self) -> Graph:
        """The pattern as a graph, labelled the way detectors report witnesses."""
        k = self.kind
        if k == "fan":
            return families.fan(*self.params).graph
        if k == "friendship":
            return families.friendship(*self.params).graph
        if k == "theta":
            return families.theta(*self.params)
        if k == "book":
            return families.book(*self.params)
        if k == "cycle":
            return families.cycle(*self.params)
        if k == "clique":
            if self.params[0] < 1:
                raise ValueError("clique needs r >= 1")
            return families.complete(*self.params)
        if k == "generic":
            return self.graph
        raise ValueError("oddfree is a family of cycles, not a single graph")

    def alternatives(self) -> list[Graph]:
        """Graphs whose presence means containment (several for oddfree)."""
        if self.kind == "oddfree":
            return [families.cycle(c) for c in range(3, 2 * self.params[0] + 2, 2)]
        return [self.pattern_graph()]

    def __str__(self) -> str:
        short = {"friendship": "fr"}.get(self.kind, self.kind)
        if self.kind == "generic":
            return f"g6:{graph6.encode(self.graph)}"
        return f"{short}:{','.join(map(str, self.params))}"


def parse_pattern(text: str) -> PatternSpec:
    """Parse ``fan:k | fr:k | theta:t,p,q | book:r | cycle:t | clique:r | oddfree:k | g6:<str>``."""
    if ":" not in text:
        raise ValueError(f"pattern {text!r} lacks a ':'")
    head, _, body = text.partition(":")
    head = head.strip().lower()
    if head == "g6":
        return PatternSpec.generic(graph6.decode(body))
    kind = {"fr": "friendship", "friendship": "friendship"}.get(head, head)
    if kind not in KINDS or kind == "generic":
        raise ValueError(f"unknown pattern kind {head!r}")
    try:
        params = tuple(int(x) for x in body.split(","))
    except ValueError:
        raise ValueError(f"bad parameters in pattern {text!r}") from None
    return PatternSpec(kind, params)


@dataclass(frozen=True)
class Witness:
    pattern: Graph
    mapping: tuple[int, ...]   # pattern vertex i -> host vertex mapping[i]

    def validate(self, host: Graph) -> bool:
        if len(self.mapping) != self.pattern.n or len(set(self.mapping)) != len(self.mapping):
            return False
        if any(not 0 <= v < host.n for v in self.mapping):
            return False
        return all(host.has_edge(self.mapping[u], self.mapping[v]) for u, v in self.pattern.edges())


def _by_degree(g: Graph) -> list[int]:
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


# ------------------------------------------------------------ neighbourhoods

def neighborhood_longest_path(g: Graph, u: int) -> int:
    """Order of a longest path in G[N(u)] (exact, |N(u)| <= 24)."""
    if g.degree(u) > DP_CAP:
        raise CapabilityError(f"|N({u})| = {g.degree(u)} exceeds the exact cap {DP_CAP}")
    return longest_path_order(g, g.adj[u])


def neighborhood_max_matching(g: Graph, u: int) -> int:
    return len(max_matching(g, g.adj[u]))


def book_width(g: Graph) -> int:
    """max over edges uv of |N(u) ∩ N(v)|."""
    if g.m == 0:
        raise ValueError("book width needs at least one edge")
    return max((g.adj[u] & g.adj[v]).bit_count() for u, v in g.edges())


def odd_girth(g: Graph) -> tuple[int, list[int]] | None:
    """Length and vertex sequence of a shortest odd cycle, or None if bipartite."""
    best: tuple[int, list[int]] | None = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        found = None
        while queue and found is None:
            x = queue.popleft()
            for y in members(g.adj[x]):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif dist[y] == dist[x] and x < y:
                    found = (x, y)
                    break
        if found is None:
            continue
        x, y = found
        px, py = [x], [y]
        while parent[px[-1]] != -1:
            px.append(parent[px[-1]])
        while parent[py[-1]] != -1:
            py.append(parent[py[-1]])
        # drop the shared tail back to the root, keep the meeting vertex once
        while len(px) > 1 and len(py) > 1 and px[-2] == py[-2]:
            px.pop()
            py.pop()
        cyc = px + py[-2::-1]
        if best is None or len(cyc) < best[0]:
            best = (len(cyc), cyc)
    return best


def odd_girth_check(g: Graph, k: int) -> bool:
    """True iff g has no odd cycle of length <= 2k+1."""
    og = odd_girth(g)
    return og is None or og[0] > 2 * k + 1


# ------------------------------------------------------------ generic oracle

def _pattern_order(p: Graph) -> list[int]:
    order: list[int] = []
    placed = 0
    remaining = set(range(p.n))
    while remaining:
        v = max(remaining, key=lambda v: ((p.adj[v] & placed).bit_count(), p.degree(v), -v))
        order.append(v)
        placed |= 1 << v
        remaining.remove(v)
    return order


def generic_subiso(g: Graph, pattern: Graph) -> Witness | None:
    """Exhaustive backtracking search for a (non-induced) copy of ``pattern``."""
    if pattern.n > g.n or pattern.m > g.m:
        return None
    if pattern.n == 0:
        return Witness(pattern, ())
    order = _pattern_order(pattern)
    pdeg = pattern.degrees()
    hdeg = g.degrees()
    twins = twin_classes(g)
    earlier = []
    seen = 0
    for v in order:
        earlier.append([w for w in members(pattern.adj[v] & seen)])
        seen |= 1 << v
    mapping = [-1] * pattern.n
    full = g.vertex_mask

    def extend(i: int, used: int) -> bool:
        if i == len(order):
            return True
        pv = order[i]
        cand = full & ~used
        for w in earlier[i]:
            cand &= g.adj[mapping[w]]
        tried = set()
        for hv in members(cand):
            if hdeg[hv] < pdeg[pv] or twins[hv] in tried:
                continue
            tried.add(twins[hv])
            mapping[pv] = hv
            if extend(i + 1, used | 1 << hv):
                return True
        mapping[pv] = -1
        return False

    if extend(0, 0):
        return Witness(pattern, tuple(mapping))
    return None


# ------------------------------------------------------------ specialised

def _fan(g: Graph, k: int) -> Witness | None:
    need = k - 1
    pattern = families.fan(k).graph
    for u in _by_degree(g):
        if g.degree(u) < need:
            break
        found = find_path(g, g.adj[u], need)
        if found:
            return Witness(pattern, (u, *found))
    return None


def _friendship(g: Graph, k: int) -> Witness | None:
    pattern = families.friendship(k).graph
    for u in _by_degree(g):
        if g.degree(u) < 2 * k:
            break
        mt = max_matching(g, g.adj[u])
        if len(mt) >= k:
            flat = [v for edge in mt[:k] for v in edge]
            return Witness(pattern, (u, *flat))
    return None


def _book(g: Graph, r: int) -> Witness | None:
    pattern = families.book(r)
    for u, v in g.edges():
        common = g.adj[u] & g.adj[v]
        if common.bit_count() >= r + 1:
            return Witness(pattern, (u, v, *members(common)[: r + 1]))
    return None


def _theta(g: Graph, t: int, p: int, q: int) -> Witness | None:
    found = find_theta(g, t, p, q)
    if found is None:
        return None
    a, b, interiors = found
    return Witness(families.theta(t, p, q), (a, b, *[v for part in interiors for v in part]))


def _cycle(g: Graph, t: int) -> Witness | None:
    found = find_cycle(g, t)
    return Witness(families.cycle(t), tuple(found)) if found else None


def _clique(g: Graph, r: int) -> Witness | None:
    twins = twin_classes(g)

    def grow(clique: list[int], cand: int) -> list[int] | None:
        if len(clique) == r:
            return clique
        if len(clique) + cand.bit_count() < r:
            return None
        tried = set()
        for v in members(cand):
            if twins[v] in tried:
                continue
            tried.add(twins[v])
            got = grow(clique + [v], cand & g.adj[v] & ~((1 << (v + 1)) - 1))
            if got:
                return got
        return None

    found = grow([], g.vertex_mask)
    return Witness(families.complete(r), tuple(found)) if found else None


def contains(g: Graph, spec: PatternSpec) -> Witness | None:
    """A witness that ``spec`` occurs in ``g`` as a subgraph, or None."""
    kind = spec.kind
    if kind != "oddfree" and spec.pattern_graph().n > g.n:
        return None
    if kind == "fan":
        return _fan(g, spec.params[0])
    if kind == "friendship":
        return _friendship(g, spec.params[0])
    if kind == "book":
        return _book(g, spec.params[0])
    if kind == "theta":
        return _theta(g, *spec.params)
    if kind == "cycle":
        return _cycle(g, spec.params[0])
    if kind == "clique":
        return _clique(g, spec.params[0])
    if kind == "oddfree":
        og = odd_girth(g)
        if og is None or og[0] > 2 * spec.params[0] + 1:
            return None
        return Witness(families.cycle(og[0]), tuple(og[1]))
    return generic_subiso(g, spec.graph)


def is_free(g: Graph, spec: PatternSpec) -> bool:
    return contains(g, spec) is None


def contains_generic(g: Graph, spec: PatternSpec) -> Witness | None:
    """Containment decided by the generic oracle alone."""
    for alt in spec.alternatives():
        w = generic_subiso(g, alt)
        if w is not None:
            return w
    return None
