"""Canonical labelling by partition refinement and a pruned search tree.

The ordered partition is refined to equitability, the first smallest
non-singleton cell is individualised, and the leaf whose relabelled
adjacency (graph6 bit order) is lexicographically smallest wins.  Two
kinds of automorphism prune the tree without changing the set of leaf
codes: twin swaps, and automorphisms discovered when two leaves produce
the same code.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import graph6
from .graph import Graph, members, relabel, twin_classes


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {v: tuple((adj[v] & m).bit_count() for m in masks) for v in cell}
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                out.append(cell)
                continue
            changed = True
            for key in keys:
                out.append([v for v in cell if sig[v] == key])
        cells = out
        if not changed:
            return cells


def _code(adj: tuple[int, ...], order: list[int]) -> int:
    n = len(order)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    rows = [0] * n
    for i, v in enumerate(order):
        r = 0
        for w in members(adj[v]):
            r |= 1 << pos[w]
        rows[i] = r
    code = 0
    for j in range(1, n):
        rj = rows[j]
        for i in range(j):
            code = (code << 1) | ((rj >> i) & 1)
    return code


def _orbit_reps(cell: list[int], gens: list[tuple[int, ...]]) -> dict[int, int]:
    parent = {v: v for v in cell}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for perm in gens:
        for v in cell:
            w = perm[v]
            if w in parent:
                a, b = find(v), find(w)
                if a != b:
                    parent[max(a, b)] = min(a, b)
    return {v: find(v) for v in cell}


@dataclass(frozen=True)
class Labelling:
    order: tuple[int, ...]          # canonical position i holds original vertex order[i]
    generators: tuple[tuple[int, ...], ...]  # automorphisms found along the way

    def position(self) -> list[int]:
        pos = [0] * len(self.order)
        for i, v in enumerate(self.order):
            pos[v] = i
        return pos


def canonical_labelling(g: Graph) -> Labelling:
    n = g.n
    if n == 0:
        return Labelling((), ())
    adj = g.adj
    twins = twin_classes(g)
    best: list = [None, None]  # code, order
    gens: list[tuple[int, ...]] = []

    def search(cells: list[list[int]], fixed: list[int]) -> None:
        cells = _refine(adj, cells)
        if len(cells) == n:
            order = [c[0] for c in cells]
            code = _code(adj, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            elif code == best[0]:
                perm = [0] * n
                for a, b in zip(best[1], order):
                    perm[a] = b
                gens.append(tuple(perm))
            return
        target = min((i for i, c in enumerate(cells) if len(c) > 1),
                     key=lambda i: (len(cells[i]), i))
        cell = cells[target]
        tried_twins: set[int] = set()
        tried: list[int] = []
        for v in cell:
            if twins[v] in tried_twins:
                continue
            if tried:
                usable = [p for p in gens if all(p[f] == f for f in fixed)]
                if usable:
                    reps = _orbit_reps(cell, usable)
                    if any(reps[v] == reps[t] for t in tried):
                        continue
            tried_twins.add(twins[v])
            tried.append(v)
            rest = [w for w in cell if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:], fixed + [v])

    search([list(range(n))], [])
    return Labelling(tuple(best[1]), tuple(gens))


def canonical_graph(g: Graph) -> Graph:
    return relabel(g, list(canonical_labelling(g).order))


@lru_cache(maxsize=1 << 16)
def canonical_form(g: Graph) -> str:
    """Canonical graph6 string: equal for two graphs iff they are isomorphic."""
    return graph6.encode(canonical_graph(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
