"""Constructors for the named graph families.

Constructors whose family has a distinguished vertex or vertex set return a
:class:`FamilyInstance` carrying that annotation in ``designated``.
"""
from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field

from .canon import canonical_form
from .graph import Graph, add_edge, delete_edge, disjoint_union, join


@dataclass(frozen=True)
class FamilyInstance:
    graph: Graph
    designated: dict[str, tuple[int, ...]] = field(default_factory=dict)


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty(n: int) -> Graph:
    return Graph.empty(n)


def complete_bipartite(a: int, b: int) -> Graph:
    return join(empty(a), empty(b))


def star(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


def fan(k: int) -> FamilyInstance:
    """F_k = K_1 ∨ P_{k-1}; vertex 0 is the centre, 1..k-1 the path in order."""
    if k < 3:
        raise ValueError(f"fan needs k >= 3, got {k}")
    return FamilyInstance(join(complete(1), path(k - 1)), {"central": (0,)})


def friendship(k: int) -> FamilyInstance:
    """F_{k,3}: hub 0 and triangles {0, 2i+1, 2i+2}."""
    if k < 1:
        raise ValueError(f"friendship graph needs k >= 1, got {k}")
    edges = []
    for i in range(k):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    return FamilyInstance(Graph.from_edges(2 * k + 1, edges), {"hub": (0,)})


def theta(t: int, p: int, q: int) -> Graph:
    """θ_{t,p,q}: branch vertices 0 and 1, then the interiors of the t-, p- and q-paths."""
    if not (1 <= t <= p <= q) or p < 2:
        raise ValueError(f"theta needs 1 <= t <= p <= q and p >= 2, got ({t}, {p}, {q})")
    n = t + p + q - 1
    edges = []
    nxt = 2
    for length in (t, p, q):
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph.from_edges(n, edges)


def book(r: int) -> Graph:
    """B_{r+1}: spine 0-1 and pages 2..r+2."""
    if r < 0:
        raise ValueError(f"book needs r >= 0, got {r}")
    edges = [(0, 1)]
    for page in range(2, r + 3):
        edges += [(0, page), (1, page)]
    return Graph.from_edges(r + 3, edges)


def split_like(n: int, k: int) -> FamilyInstance:
    """S_{n,k} = K_k ∨ (n-k)K_1 with the dominating clique on 0..k-1."""
    if not n > k >= 1:
        raise ValueError(f"S_(n,k) needs n > k >= 1, got ({n}, {k})")
    return FamilyInstance(join(complete(k), empty(n - k)), {"dominating": tuple(range(k))})


def s_plus(n: int, k: int) -> FamilyInstance:
    """S⁺_{n,k}: S_{n,k} plus the edge between independent vertices k and k+1."""
    if not (k >= 1 and n >= k + 2):
        raise ValueError(f"S+_(n,k) needs k >= 1 and n >= k + 2, got ({n}, {k})")
    base = split_like(n, k)
    return FamilyInstance(add_edge(base.graph, k, k + 1), base.designated)


def l_family(n: int, k: int) -> Iterator[Graph]:
    """Pairwise non-isomorphic graphs obtained from S⁺_{n,k} by deleting one edge."""
    g = s_plus(n, k).graph
    seen = set()
    for u, v in g.edges():
        h = delete_edge(g, u, v)
        key = canonical_form(h)
        if key not in seen:
            seen.add(key)
            yield h


def extremal(k: int, t: int) -> FamilyInstance:
    """K_k ∨ tK_1, the equality graph; m = k(k-1)/2 + kt."""
    if k < 1 or t < 1:
        raise ValueError(f"extremal graph needs k >= 1 and t >= 1, got ({k}, {t})")
    return FamilyInstance(join(complete(k), empty(t)), {"dominating": tuple(range(k))})


def extremal_size(k: int, t: int) -> int:
    return k * (k - 1) // 2 + k * t


def matching_graph(t: int) -> Graph:
    """M_t: floor(t/2) disjoint edges, plus an isolated vertex when t is odd."""
    if t < 0:
        raise ValueError(f"M_t needs t >= 0, got {t}")
    return Graph.from_edges(t, [(2 * i, 2 * i + 1) for i in range(t // 2)])


def subdivided_kb(q: int) -> Graph:
    """SK_{2,q}: K_{2,q} with one edge subdivided (new vertex q+2)."""
    if q < 1:
        raise ValueError(f"SK_(2,q) needs q >= 1, got {q}")
    g = delete_edge(complete_bipartite(2, q), 0, 2)
    rows = list(g.adj) + [0]
    h = Graph(g.n + 1, tuple(rows))
    return add_edge(add_edge(h, 0, g.n), g.n, 2)


def rk(q: int) -> Graph:
    """RK_{2,q}: K_{2,q} with one edge replaced by a path P_5 (three new vertices)."""
    if q < 1:
        raise ValueError(f"RK_(2,q) needs q >= 1, got {q}")
    g = delete_edge(complete_bipartite(2, q), 0, 2)
    base = g.n
    h = Graph(base + 3, g.adj + (0, 0, 0))
    for u, v in [(0, base), (base, base + 1), (base + 1, base + 2), (base + 2, 2)]:
        h = add_edge(h, u, v)
    return h


def bh_graph(a: int, b: int) -> Graph:
    """K_b ∨ (K_{a-b} ∪ K_1); has C(a,2) + b edges."""
    if not 0 <= b < a:
        raise ValueError(f"bh_graph needs 0 <= b < a, got ({a}, {b})")
    return join(complete(b), disjoint_union(complete(a - b), complete(1)))


def bh_parameters(m: int) -> tuple[int, int]:
    """The unique (a, b) with m = C(a,2) + b and 0 <= b < a."""
    if m < 1:
        raise ValueError("m must be positive")
    a = 1
    while (a + 1) * a // 2 <= m:
        a += 1
    return a, m - a * (a - 1) // 2


FAMILIES = {
    "path": path, "cycle": cycle, "complete": complete, "empty": empty,
    "complete_bipartite": complete_bipartite, "star": star, "fan": fan,
    "friendship": friendship, "theta": theta, "book": book,
    "split_like": split_like, "s_plus": s_plus, "extremal": extremal,
    "matching_graph": matching_graph, "subdivided_kb": subdivided_kb,
    "rk": rk, "bh_graph": bh_graph,
}


def build(name: str, *params: int) -> Graph:
    result = FAMILIES[name](*params)
    return result.graph if isinstance(result, FamilyInstance) else result
