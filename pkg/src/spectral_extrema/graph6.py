"""Short-form graph6 encoding (n <= 62)."""
from __future__ import annotations

from .graph import Graph


class Graph6Error(ValueError):
    pass


def encode(g: Graph) -> str:
    if g.n > 62:
        raise Graph6Error("long-form graph6 (n >= 63) is not supported")
    bits = [(g.adj[i] >> j) & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    chunks = [chr(63 + n6) for n6 in (
        int("".join(map(str, bits[i:i + 6])), 2) for i in range(0, len(bits), 6)
    )]
    return chr(63 + g.n) + "".join(chunks)


def decode(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise Graph6Error("empty graph6 string")
    codes = [ord(c) - 63 for c in text]
    if any(not 0 <= c <= 63 for c in codes):
        raise Graph6Error(f"byte outside the graph6 range in {text!r}")
    n = codes[0]
    if n == 63:
        raise Graph6Error("long-form graph6 (n >= 63) is not supported")
    npairs = n * (n - 1) // 2
    expected = (npairs + 5) // 6
    body = codes[1:]
    if len(body) != expected:
        raise Graph6Error(f"expected {expected} data bytes for n={n}, got {len(body)}")
    bits = []
    for c in body:
        bits.extend((c >> s) & 1 for s in range(5, -1, -1))
    if any(bits[npairs:]):
        raise Graph6Error("nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)
