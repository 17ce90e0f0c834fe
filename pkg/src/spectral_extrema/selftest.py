"""Quick equivalence checks of the fast routines against the brute-force oracles."""
from __future__ import annotations

import random
import time

import numpy as np

from . import graph6, oracles
from .canon import canonical_form
from .core_eta import k_core, k_core_bruteforce
from .graph import Graph, relabel
from .matching import matching_number
from .paths import longest_path_order
from .patterns import PatternSpec, contains, contains_generic
from .spectral import full_spectrum, spectral_radius


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def _check_graph6(rng):
    for _ in range(200):
        g = random_graph(rng, rng.randint(0, 12), rng.random())
        if graph6.decode(graph6.encode(g)) != g:
            return False
    return True


def _check_canon(rng):
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 6), rng.random())
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = relabel(g, perm)
        if canonical_form(g) != canonical_form(h):
            return False
        other = random_graph(rng, g.n, rng.random())
        if (canonical_form(g) == canonical_form(other)) != oracles.isomorphic_bruteforce(g, other):
            return False
    return True


def _check_spectrum(rng):
    for _ in range(50):
        g = random_graph(rng, rng.randint(2, 10), rng.random())
        ref = np.linalg.eigvalsh(g.to_numpy().astype(float))
        if not np.allclose(sorted(full_spectrum(g)), ref, atol=1e-8):
            return False
        if g.m and abs(spectral_radius(g).lambda1 - ref[-1]) > 1e-8:
            return False
    return True


def _check_patterns(rng):
    specs = [PatternSpec.fan(4), PatternSpec.friendship(2), PatternSpec.theta(1, 2, 3),
             PatternSpec.book(1), PatternSpec.cycle(5), PatternSpec.clique(4), PatternSpec.oddfree(2)]
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 8), rng.random())
        for spec in specs:
            fast = contains(g, spec)
            if fast is not None and not fast.validate(g):
                return False
            if (fast is None) != (contains_generic(g, spec) is None):
                return False
    return True


def _check_paths_matching_core(rng):
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 8), rng.random())
        if g.n and longest_path_order(g) != oracles.longest_path_bruteforce(g):
            return False
        if matching_number(g) != oracles.matching_bruteforce(g):
            return False
        k = rng.randint(0, 4)
        if k_core(g, k).core != k_core_bruteforce(g, k):
            return False
    return True


CHECKS = [
    ("graph6_roundtrip", _check_graph6),
    ("canonical_form_vs_bruteforce", _check_canon),
    ("spectrum_vs_numpy", _check_spectrum),
    ("patterns_vs_generic", _check_patterns),
    ("paths_matching_core_vs_bruteforce", _check_paths_matching_core),
]


def run_all(seed: int = 0) -> list[dict]:
    out = []
    for name, fn in CHECKS:
        start = time.perf_counter()
        ok = bool(fn(random.Random(seed)))
        out.append({"name": name, "ok": ok, "seconds": time.perf_counter() - start})
    return out
