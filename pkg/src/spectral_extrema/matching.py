"""Maximum matching in general graphs (Edmonds' blossom algorithm)."""
from __future__ import annotations

from collections import deque

from .graph import Graph, VertexSet, members


def max_matching(g: Graph, scope: VertexSet | None = None) -> list[tuple[int, int]]:
    """A maximum matching of G[scope] as a list of edges (u, v), u < v."""
    scope = g.vertex_mask if scope is None else scope
    verts = members(scope)
    n = len(verts)
    pos = {v: i for i, v in enumerate(verts)}
    nbrs = [[pos[w] for w in members(g.adj[v] & scope)] for v in verts]
    match = [-1] * n

    # greedy start; augmentation fixes any suboptimality
    for v in range(n):
        if match[v] == -1:
            for w in nbrs[v]:
                if match[w] == -1:
                    match[v], match[w] = w, v
                    break

    def augment_from(root: int) -> bool:
        parent = [-1] * n
        base = list(range(n))
        used = [False] * n
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while queue:
            v = queue.popleft()
            for to in nbrs[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark(v, cur, to, blossom)
                    mark(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        while to != -1:
                            pv = parent[to]
                            nxt = match[pv]
                            match[to], match[pv] = pv, to
                            to = nxt
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            augment_from(v)
    return [(verts[v], verts[match[v]]) for v in range(n) if match[v] > v]


def matching_number(g: Graph, scope: VertexSet | None = None) -> int:
    return len(max_matching(g, scope))
