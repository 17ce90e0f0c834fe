"""Brute-force reference implementations.

Deliberately naive: no refinement, no symmetry pruning, no memoisation.
They exist to check the fast routines on small inputs.
"""
from __future__ import annotations

import itertools

import numpy as np

from .graph import Graph, members


def permutation_code(g: Graph) -> int:
    """Smallest graph6-order bit string over all n! relabellings."""
    n = g.n
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    best = None
    for perm in itertools.permutations(range(n)):
        code = 0
        for i, j in pairs:
            code = (code << 1) | g.has_edge(perm[i], perm[j])
        if best is None or code < best:
            best = code
    return best or 0


def permutation_codes_numpy(g: Graph) -> int:
    """Vectorised permutation_code for n <= 8."""
    n = g.n
    if n <= 1:
        return 0
    a = g.to_numpy().astype(np.int64)
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    bits = np.stack([a[perms[:, i], perms[:, j]] for i, j in pairs], axis=1)
    weights = 1 << np.arange(len(pairs) - 1, -1, -1, dtype=np.int64)
    return int((bits * weights).sum(axis=1).min())


def _degree_invariant(g: Graph) -> tuple:
    deg = g.degrees()
    return tuple(sorted((deg[v], tuple(sorted(deg[w] for w in members(g.adj[v])))) for v in range(g.n)))


def isomorphic_bruteforce(g: Graph, h: Graph) -> bool:
    """Try every bijection that preserves degrees."""
    if g.n != h.n or g.m != h.m or _degree_invariant(g) != _degree_invariant(h):
        return False
    gd, hd = g.degrees(), h.degrees()
    classes = sorted(set(gd))
    gsrc = [[v for v in range(g.n) if gd[v] == d] for d in classes]
    hdst = [[v for v in range(h.n) if hd[v] == d] for d in classes]
    edges = g.edges()
    for parts in itertools.product(*(itertools.permutations(c) for c in hdst)):
        perm = [0] * g.n
        for src, dst in zip(gsrc, parts):
            for a, b in zip(src, dst):
                perm[a] = b
        if all(h.has_edge(perm[u], perm[v]) for u, v in edges):
            return True
    return False


def subgraph_bruteforce(g: Graph, pattern: Graph) -> bool:
    """Injective edge-preserving map by plain backtracking without pruning."""
    if pattern.n > g.n:
        return False
    mapping: list[int] = []

    def rec(i: int) -> bool:
        if i == pattern.n:
            return True
        for hv in range(g.n):
            if hv in mapping:
                continue
            if all(g.has_edge(hv, mapping[w]) for w in members(pattern.adj[i]) if w < i):
                mapping.append(hv)
                if rec(i + 1):
                    return True
                mapping.pop()
        return False

    return rec(0)


def longest_path_bruteforce(g: Graph, scope: int | None = None) -> int:
    verts = members(g.vertex_mask if scope is None else scope)
    best = 1 if verts else 0
    for r in range(2, len(verts) + 1):
        for sub in itertools.permutations(verts, r):
            if sub[0] < sub[-1] and all(g.has_edge(a, b) for a, b in zip(sub, sub[1:])):
                best = r
                break
        if best < r:
            break
    return best


def all_cycle_lengths(g: Graph) -> set[int]:
    """Lengths of all simple cycles, by enumerating vertex sequences."""
    out = set()
    for r in range(3, g.n + 1):
        for sub in itertools.permutations(range(g.n), r):
            if sub[0] != min(sub) or sub[1] > sub[-1]:
                continue
            if all(g.has_edge(a, b) for a, b in zip(sub, sub[1:] + sub[:1])):
                out.add(r)
                break
    return out


def matching_bruteforce(g: Graph, scope: int | None = None) -> int:
    scope = g.vertex_mask if scope is None else scope

    def rec(mask: int) -> int:
        if not mask:
            return 0
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        best = rec(rest)
        for w in members(g.adj[v] & rest):
            best = max(best, 1 + rec(rest & ~(1 << w)))
        return best

    return rec(scope)


def graphs_with_edges(m: int, n: int, connected: bool) -> list[Graph]:
    """All graphs on exactly n vertices with m edges and no isolated vertices,
    one per isomorphism class (edge-subset enumeration + brute-force
    isomorphism inside degree-invariant buckets)."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    buckets: dict[tuple, list[Graph]] = {}
    for chosen in itertools.combinations(pairs, m):
        g = Graph.from_edges(n, chosen)
        if g.isolated() or (connected and not g.is_connected()):
            continue
        reps = buckets.setdefault(_degree_invariant(g), [])
        if not any(isomorphic_bruteforce(g, r) for r in reps):
            reps.append(g)
    return [g for reps in buckets.values() for g in reps]
