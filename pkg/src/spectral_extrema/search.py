"""Exhaustive and local search for spectrally extremal H-free graphs of size m.

Enumeration is orderly generation by canonical edge deletion: a graph with
m edges is produced from its canonical parent (delete the canonically last
eligible edge, drop isolated vertices), and every node of the generation
tree is unique up to isomorphism.  Forbidden-subgraph constraints are
hereditary, so non-free nodes are pruned at every level.
"""
from __future__ import annotations

import math
import os
import random
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace

from . import graph6
from .canon import canonical_form, canonical_labelling
from .families import bh_graph, bh_parameters
from .graph import Graph, add_edge, add_vertices, delete_edge, drop_isolated, members, relabel
from .patterns import PatternSpec, contains, odd_girth
from .spectral import EQ_TOL, STRICT_MARGIN, BoundSpec, bound_value, spectral_radius

MAX_EXHAUSTIVE_M = 14
MAX_EXHAUSTIVE_N = 11
# an explicit n_max at or below this bounds the work by itself, so the edge rail is lifted
SMALL_N_OVERRIDE = 9


class ConfigurationError(ValueError):
    pass


@dataclass(frozen=True)
class SearchConfig:
    m: int
    pattern: PatternSpec | None = None
    n_min: int | None = None
    n_max: int | None = None
    connected_only: bool = True
    forbid_isolated: bool = True
    mode: str = "exhaustive"
    seed: int = 0
    budget: int = 10_000
    non_bipartite: bool = False     # output filter only (not hereditary)
    workers: int = 1
    split_depth: int = 2

    def natural_n_max(self) -> int:
        return self.m + 1 if self.connected_only else 2 * self.m

    def resolved(self) -> tuple[int, int, bool]:
        """(n_min, n_max, cap_binding) after defaults and guard rails."""
        if self.m < 1:
            raise ConfigurationError("m must be at least 1")
        if self.mode not in ("exhaustive", "hill_climb"):
            raise ConfigurationError(f"unknown mode {self.mode!r}")
        n_min = self.n_min if self.n_min is not None else math.ceil((1 + math.sqrt(1 + 8 * self.m)) / 2)
        natural = self.natural_n_max()
        if self.n_max is not None:
            n_max = self.n_max
        else:
            n_max = min(natural, MAX_EXHAUSTIVE_N) if self.mode == "exhaustive" else min(natural, 62)
        if n_max > 62:
            raise ConfigurationError("n_max exceeds the 62-vertex cap")
        if self.mode == "exhaustive":
            small_n = self.n_max is not None and self.n_max <= SMALL_N_OVERRIDE
            if self.m > MAX_EXHAUSTIVE_M and not small_n:
                raise ConfigurationError(
                    f"exhaustive mode needs m <= {MAX_EXHAUSTIVE_M} (or an explicit n_max <= {SMALL_N_OVERRIDE})")
            if n_max > MAX_EXHAUSTIVE_N:
                raise ConfigurationError(f"exhaustive mode needs n_max <= {MAX_EXHAUSTIVE_N}")
        return n_min, n_max, n_max < natural

    def describe(self) -> dict:
        d = asdict(self)
        d["pattern"] = str(self.pattern) if self.pattern else None
        return d


# ---------------------------------------------------------------- generation

def _deletion_keeps_class(g: Graph, u: int, v: int, connected: bool) -> bool:
    if not connected:
        return True
    if g.degree(u) == 1 or g.degree(v) == 1:
        return True
    return delete_edge(g, u, v).is_connected()


def _canonical_parent(c: Graph, connected: bool) -> str:
    """Canonical form of the parent of a canonically labelled graph ``c``."""
    for u, v in sorted(c.edges(), key=lambda e: (e[1], e[0]), reverse=True):
        if _deletion_keeps_class(c, u, v, connected):
            return canonical_form(drop_isolated(delete_edge(c, u, v)))
    raise AssertionError("no eligible edge to delete")


def _children(parent: Graph, parent_key: str, connected: bool, n_max: int) -> Iterator[Graph]:
    n = parent.n
    moves: list[tuple[int, int, int]] = [(u, v, 0) for u, v in parent.non_edges()]
    if n + 1 <= n_max:
        moves += [(u, n, 1) for u in range(n)]
    if not connected and n + 2 <= n_max:
        moves.append((n, n + 1, 2))
    seen: set[str] = set()
    for u, v, extra in moves:
        child = add_edge(add_vertices(parent, extra) if extra else parent, u, v)
        lab = canonical_labelling(child)
        c = relabel(child, list(lab.order))
        key = graph6.encode(c)
        if key in seen:
            continue
        seen.add(key)
        if _canonical_parent(c, connected) == parent_key:
            yield c


def _passes(g: Graph, pattern: PatternSpec | None) -> bool:
    return pattern is None or contains(g, pattern) is None


@dataclass
class Census:
    """``enumerated`` counts size-m graphs reached by the walk; smaller graphs
    that already contain the pattern are cut off and counted in ``pruned``
    (their size-m descendants are never generated)."""
    enumerated: int = 0
    passed: int = 0
    nodes: int = 0
    pruned: int = 0

    def merge(self, other: Census) -> None:
        self.enumerated += other.enumerated
        self.passed += other.passed
        self.nodes += other.nodes
        self.pruned += other.pruned


def _walk(root: Graph, root_m: int, cfg: SearchConfig, n_min: int, n_max: int,
          census: Census) -> Iterator[Graph]:
    """Depth-first walk of the generation subtree below ``root``."""
    target = cfg.m

    def rec(g: Graph, key: str, level: int) -> Iterator[Graph]:
        census.nodes += 1
        if level == target:
            census.enumerated += 1
            if not _passes(g, cfg.pattern):
                return
            if cfg.non_bipartite and odd_girth(g) is None:
                return
            for padded in _pad(g, cfg, n_min, n_max):
                census.passed += 1
                yield padded
            return
        for child in _children(g, key, cfg.connected_only, n_max):
            if level + 1 < target and not _passes(child, cfg.pattern):
                census.pruned += 1
                continue
            yield from rec(child, graph6.encode(child), level + 1)

    yield from rec(root, canonical_form(root), root_m)


def _pad(g: Graph, cfg: SearchConfig, n_min: int, n_max: int) -> Iterator[Graph]:
    if cfg.forbid_isolated or cfg.connected_only:
        if n_min <= g.n <= n_max:
            yield g
        return
    for n in range(max(g.n, n_min), n_max + 1):
        yield add_vertices(g, n - g.n)


def _roots(cfg: SearchConfig, n_max: int, depth: int, census: Census) -> list[Graph]:
    k2 = Graph.from_edges(2, [(0, 1)])
    level = [k2]
    for _ in range(depth - 1):
        nxt = []
        for g in level:
            for child in _children(g, canonical_form(g), cfg.connected_only, n_max):
                if _passes(child, cfg.pattern):
                    nxt.append(child)
                else:
                    census.pruned += 1
        level = nxt
    return level


def enumerate_graphs(cfg: SearchConfig, census: Census | None = None) -> Iterator[Graph]:
    """One canonically labelled representative per isomorphism class meeting ``cfg``."""
    n_min, n_max, _ = cfg.resolved()
    census = census if census is not None else Census()
    k2 = Graph.from_edges(2, [(0, 1)])
    if n_max < 2:
        return
    if not _passes(k2, cfg.pattern) and cfg.m >= 1:
        if cfg.m == 1:
            census.enumerated += 1
        else:
            census.pruned += 1
        return
    yield from _walk(k2, 1, cfg, n_min, n_max, census)


# ---------------------------------------------------------------- reports

@dataclass
class BoundCheck:
    kind: str
    value: float
    gap: float
    violated: bool
    note: str = ""


@dataclass
class SearchReport:
    best_lambda: float | None
    argmax: list[str]
    census: Census
    config: dict
    n_range: tuple[int, int]
    n_cap_binding: bool
    bound: BoundCheck | None = None
    extra: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        d = {
            "best_lambda": self.best_lambda,
            "argmax": list(self.argmax),
            "census": asdict(self.census),
            "config": self.config,
            "n_range": list(self.n_range),
            "n_cap_binding": self.n_cap_binding,
            "bound": asdict(self.bound) if self.bound else None,
        }
        d.update(self.extra)
        return d


class _Tracker:
    def __init__(self) -> None:
        self.best: float | None = None
        self.cands: list[tuple[float, str]] = []

    def offer(self, lam: float, key: str) -> None:
        if self.best is None or lam > self.best:
            self.best = lam
        if lam >= self.best - EQ_TOL:
            self.cands = [(l, k) for l, k in self.cands if l >= self.best - EQ_TOL]
            self.cands.append((lam, key))

    def merge(self, other: _Tracker) -> None:
        for lam, key in other.cands:
            self.offer(lam, key)

    def argmax(self) -> list[str]:
        if self.best is None:
            return []
        return sorted({k for l, k in self.cands if l >= self.best - EQ_TOL})


def _search_subtree(args) -> tuple[_Tracker, Census]:
    root, root_m, cfg, n_min, n_max = args
    census = Census()
    tracker = _Tracker()
    for g in _walk(root, root_m, cfg, n_min, n_max, census):
        tracker.offer(spectral_radius(g).lambda1, canonical_form(g))
    return tracker, census


def extremal_search(cfg: SearchConfig) -> SearchReport:
    """Maximise λ over the filtered enumeration (ties within 1e-8 kept)."""
    if cfg.mode == "hill_climb":
        raise ConfigurationError("use hill_climb() for local search")
    n_min, n_max, binding = cfg.resolved()
    tracker = _Tracker()
    census = Census()
    depth = min(cfg.split_depth, cfg.m - 1)
    if cfg.workers > 1 and depth >= 2:
        roots = _roots(cfg, n_max, depth, census)
        census.nodes += 1
        jobs = [(r, depth, cfg, n_min, n_max) for r in roots]
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(_search_subtree, jobs))
        for t, c in results:
            tracker.merge(t)
            census.merge(c)
    else:
        for g in enumerate_graphs(cfg, census):
            tracker.offer(spectral_radius(g).lambda1, canonical_form(g))
    return SearchReport(tracker.best, tracker.argmax(), census, cfg.describe(),
                        (n_min, n_max), binding)


SMALL_M_NOTE = ("a violation at small m is not a counterexample: the bound is only "
                "claimed for sufficiently large m")


def _bound_setup(kind: str, params: dict, cfg: SearchConfig) -> tuple[BoundSpec, SearchConfig]:
    m = cfg.m
    if kind == "nosal":
        return BoundSpec("nosal", m), replace(cfg, pattern=PatternSpec.clique(3))
    if kind == "lnw":
        return BoundSpec("lnw", m), replace(cfg, pattern=PatternSpec.clique(3), non_bipartite=True)
    if kind == "friendship_f23":
        return BoundSpec("friendship_f23", m), replace(cfg, pattern=PatternSpec.friendship(2))
    if kind == "fan_theorem":
        k = int(params["k"])
        pattern = params.get("pattern") or PatternSpec.fan(2 * k + 2)
        return BoundSpec("fan_theorem", m, k=k), replace(cfg, pattern=pattern)
    if kind == "nikiforov":
        r = int(params["r"])
        return BoundSpec("nikiforov", m, r=r), replace(cfg, pattern=PatternSpec.clique(r + 1))
    if kind == "brualdi_hoffman":
        return BoundSpec("brualdi_hoffman", m), replace(cfg, pattern=None)
    raise ConfigurationError(f"unknown bound kind {kind!r}")


def bh_target(m: int) -> Graph:
    """K_b ∨ (K_{a-b} ∪ K_1) without its isolated vertex when b = 0."""
    a, b = bh_parameters(m)
    return drop_isolated(bh_graph(a, b))


def verify_bound(kind: str, params: dict | None, cfg: SearchConfig) -> SearchReport:
    spec, run_cfg = _bound_setup(kind, params or {}, cfg)
    value = bound_value(spec)
    report = extremal_search(run_cfg)
    if report.best_lambda is None:
        report.bound = BoundCheck(kind, value, math.nan, False, "no graph passed the filter")
        return report
    gap = value - report.best_lambda
    violated = report.best_lambda > value + EQ_TOL
    report.bound = BoundCheck(kind, value, gap, violated, SMALL_M_NOTE if violated else "")
    if kind == "brualdi_hoffman":
        report.extra["bh_graph"] = canonical_form(bh_target(cfg.m))
        report.extra["argmax_is_bh_graph"] = report.argmax == [report.extra["bh_graph"]]
    return report


# ---------------------------------------------------------------- local search

def _filter_ok(g: Graph, cfg: SearchConfig) -> bool:
    if g.m != cfg.m:
        return False
    if cfg.connected_only and not g.is_connected():
        return False
    if cfg.non_bipartite and odd_girth(g) is None:
        return False
    return _passes(g, cfg.pattern)


def hill_climb(cfg: SearchConfig, start: Graph) -> SearchReport:
    """First-improvement local search over edge rotations uv -> uw.

    Isolated vertices left by a rotation are dropped.  A move is accepted
    only if λ grows by more than 1e-10.  Deterministic for a fixed seed.
    """
    start = drop_isolated(start)
    if not _filter_ok(start, cfg):
        raise ConfigurationError("start graph does not meet the configuration")
    rng = random.Random(cfg.seed)
    cur = start
    lam = spectral_radius(cur).lambda1
    evaluated = accepted = 0
    improved = True
    while improved and evaluated < cfg.budget:
        improved = False
        moves = []
        for a, b in cur.edges():
            for u, v in ((a, b), (b, a)):
                # w == cur.n means a fresh vertex
                moves += [(u, v, w) for w in range(cur.n + 1)
                          if w not in (u, v) and (w == cur.n or not cur.has_edge(u, w))]
        rng.shuffle(moves)
        for u, v, w in moves:
            if evaluated >= cfg.budget:
                break
            h = delete_edge(cur, u, v)
            if w == cur.n:
                if cur.n + 1 > 62:
                    continue
                h = add_vertices(h, 1)
            cand = drop_isolated(add_edge(h, u, w))
            if cfg.n_max is not None and cand.n > cfg.n_max:
                continue
            if not _filter_ok(cand, cfg):
                continue
            evaluated += 1
            new = spectral_radius(cand).lambda1
            if new > lam + STRICT_MARGIN:
                cur, lam = cand, new
                accepted += 1
                improved = True
                break
    report = SearchReport(lam, [canonical_form(cur)], Census(evaluated, accepted, 0),
                          cfg.describe(), (cur.n, cur.n), False)
    report.extra["moves_evaluated"] = evaluated
    report.extra["moves_accepted"] = accepted
    report.extra["local_maximum"] = not improved
    report.extra["graph6"] = graph6.encode(cur)
    return report


def default_workers() -> int:
    env = os.environ.get("SPECTRAL_EXTREMA_WORKERS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def graphs_of_order(n: int) -> list[Graph]:
    """Every graph on exactly n vertices (isolated vertices allowed), one per
    isomorphism class, by adding a vertex with every neighbour set to each
    class on n-1 vertices and deduplicating canonically.  Meant for n <= 8."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    level = {canonical_form(Graph.empty(0)): Graph.empty(0)}
    for size in range(1, n + 1):
        nxt: dict[str, Graph] = {}
        for g in level.values():
            base = add_vertices(g, 1)
            for mask in range(1 << g.n):
                h = base
                for u in members(mask):
                    h = add_edge(h, u, size - 1)
                nxt.setdefault(canonical_form(h), h)
        level = nxt
    return list(level.values())
