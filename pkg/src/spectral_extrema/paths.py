"""Exact path and cycle searches on induced subgraphs.

All searches branch over one representative per twin class of unused
vertices: swapping two unused twins is an automorphism that fixes the
partial path, so their subtrees are isomorphic.  This keeps the searches
small on graphs such as K_k ∨ tK_1 with many interchangeable vertices.
"""
from __future__ import annotations

from .graph import Graph, VertexSet, members, twin_classes

DP_CAP = 24


class CapabilityError(RuntimeError):
    """An exact computation was requested beyond its size cap."""


def _reps(candidates: VertexSet, twins: list[int]) -> list[int]:
    seen = set()
    out = []
    for v in members(candidates):
        if twins[v] not in seen:
            seen.add(twins[v])
            out.append(v)
    return out


def _component_of(g: Graph, v: int, scope: VertexSet) -> VertexSet:
    comp = frontier = 1 << v
    while frontier:
        nxt = 0
        for u in members(frontier):
            nxt |= g.adj[u]
        frontier = nxt & scope & ~comp
        comp |= frontier
    return comp


def find_path(g: Graph, scope: VertexSet, order: int, start: int | None = None) -> list[int] | None:
    """A path on ``order`` vertices inside G[scope], or None.

    With ``start`` given, the path must begin there.
    """
    if order <= 0:
        return []
    if scope.bit_count() < order:
        return None
    twins = twin_classes(g, scope)
    failed: set[tuple[int, int]] = set()

    def extend(mask: int, end: int, trail: list[int]) -> list[int] | None:
        if len(trail) == order:
            return trail
        key = (mask, end)
        if key in failed:
            return None
        for v in _reps(g.adj[end] & scope & ~mask, twins):
            found = extend(mask | 1 << v, v, trail + [v])
            if found:
                return found
        failed.add(key)
        return None

    starts = [start] if start is not None else _reps(scope, twins)
    for s in starts:
        if _component_of(g, s, scope).bit_count() < order:
            continue
        found = extend(1 << s, s, [s])
        if found:
            return found
    return None


class _Done(Exception):
    pass


def longest_path_order(g: Graph, scope: VertexSet | None = None, cap: int = DP_CAP) -> int:
    """Exact number of vertices in a longest path of G[scope]."""
    scope = g.vertex_mask if scope is None else scope
    if scope.bit_count() > cap:
        raise CapabilityError(f"longest path on {scope.bit_count()} vertices exceeds cap {cap}")
    if not scope:
        return 0
    twins = twin_classes(g, scope)
    best = 1
    for s in _reps(scope, twins):
        comp = _component_of(g, s, scope)
        bound = comp.bit_count()
        if bound <= best:
            continue
        memo: dict[tuple[int, int], int] = {}

        def extra(mask: int, end: int) -> int:
            key = (mask, end)
            if key in memo:
                return memo[key]
            val = 0
            for v in _reps(g.adj[end] & scope & ~mask, twins):
                val = max(val, 1 + extra(mask | 1 << v, v))
                if mask.bit_count() + val >= bound:
                    break
            memo[key] = val
            return val

        best = max(best, 1 + extra(1 << s, s))
    return best


def _two_core(g: Graph, scope: VertexSet) -> VertexSet:
    changed = True
    while changed:
        changed = False
        for v in members(scope):
            if (g.adj[v] & scope).bit_count() < 2:
                scope &= ~(1 << v)
                changed = True
    return scope


def longest_cycle(g: Graph, scope: VertexSet | None = None, cap: int = DP_CAP) -> int:
    """Circumference of G[scope]; 0 for forests."""
    scope = g.vertex_mask if scope is None else scope
    if scope.bit_count() > cap:
        raise CapabilityError(f"longest cycle on {scope.bit_count()} vertices exceeds cap {cap}")
    scope = _two_core(g, scope)
    best = 0
    for s in members(scope):
        allowed = scope & ~((1 << s) - 1)   # s is the smallest vertex on the cycle
        bound = _component_of(g, s, allowed).bit_count()
        if bound <= best or bound < 3:
            continue
        twins = twin_classes(g, allowed)
        memo: dict[tuple[int, int], int] = {}

        def close(mask: int, end: int) -> int:
            key = (mask, end)
            if key in memo:
                return memo[key]
            size = mask.bit_count()
            val = size if size >= 3 and g.adj[end] >> s & 1 else 0
            for v in _reps(g.adj[end] & allowed & ~mask, twins):
                if val >= bound:
                    break
                val = max(val, close(mask | 1 << v, v))
            memo[key] = val
            return val

        best = max(best, close(1 << s, s))
    return best


def find_cycle(g: Graph, length: int, scope: VertexSet | None = None) -> list[int] | None:
    """A cycle with exactly ``length`` vertices, as a vertex sequence, or None."""
    scope = g.vertex_mask if scope is None else scope
    if length < 3:
        raise ValueError("cycles have at least 3 vertices")
    scope = _two_core(g, scope)
    for s in members(scope):
        allowed = scope & ~((1 << s) - 1)
        if allowed.bit_count() < length:
            break
        twins = twin_classes(g, allowed)
        failed: set[tuple[int, int]] = set()

        def extend(mask: int, end: int, trail: list[int]) -> list[int] | None:
            if len(trail) == length:
                return trail if g.adj[end] >> s & 1 else None
            key = (mask, end)
            if key in failed:
                return None
            for v in _reps(g.adj[end] & allowed & ~mask, twins):
                found = extend(mask | 1 << v, v, trail + [v])
                if found:
                    return found
            failed.add(key)
            return None

        found = extend(1 << s, s, [s])
        if found:
            return found
    return None


def find_theta(g: Graph, t: int, p: int, q: int) -> tuple[int, int, list[list[int]]] | None:
    """Branch vertices a, b and the interiors of three internally disjoint
    a-b paths with t, p and q edges (returned in that order), or None."""
    lengths = sorted(enumerate((t, p, q)), key=lambda item: -item[1])
    twins = twin_classes(g)
    full = g.vertex_mask
    deg3 = [v for v in range(g.n) if g.degree(v) >= 3]
    deg3_mask = sum(1 << v for v in deg3)

    def paths(cur: int, b: int, steps: int, used: int, trail: list[int]):
        if steps == 1:
            if g.adj[cur] >> b & 1:
                yield trail
            return
        for v in _reps(g.adj[cur] & full & ~used, twins):
            yield from paths(v, b, steps - 1, used | 1 << v, trail + [v])

    def place(i: int, a: int, b: int, used: int, found: list) -> list | None:
        if i == 3:
            return found
        idx, length = lengths[i]
        for interior in paths(a, b, length, used, []):
            if length == 1 and any(l == 1 for _, l in lengths[:i]):
                continue
            mask = used
            for v in interior:
                mask |= 1 << v
            got = place(i + 1, a, b, mask, found + [(idx, interior)])
            if got:
                return got
        return None

    for a in _reps(deg3_mask, twins):
        for b in _reps(deg3_mask & ~(1 << a), twins):
            if t == 1 and not g.adj[a] >> b & 1:
                continue
            got = place(0, a, b, (1 << a) | (1 << b), [])
            if got:
                ordered = [inner for _, inner in sorted(got)]
                return a, b, ordered
    return None
