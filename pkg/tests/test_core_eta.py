import random
from fractions import Fraction

import pytest

from spectral_extrema import families, oracles
from spectral_extrema.core_eta import (CoreEtaContext, classify_components, decompose, eta,
                                       eta_core_inequality, k_core, k_core_bruteforce, l_core,
                                       slack_report, verify_path_lemma)
from spectral_extrema.graph import Graph, as_mask, disjoint_union, induced, join, members
from conftest import random_connected, random_graph


def test_k_core_examples():
    assert k_core(families.star(6), 2).core == 0
    assert members(k_core(families.cycle(5), 2).core) == [0, 1, 2, 3, 4]
    sp = families.s_plus(8, 2).graph
    assert k_core(sp, 2).core == sp.vertex_mask == k_core_bruteforce(sp, 2)


def test_k_core_against_bruteforce_and_order(rng):
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 9), rng.random())
        for k in range(5):
            core = k_core(g, k).core
            assert core == k_core_bruteforce(g, k)
            for seed in range(3):
                assert k_core(g, k, rng=random.Random(seed)).core == core


def test_peel_order_records_degrees():
    res = k_core(families.path(4), 2)
    assert [v for v, _ in res.peel_order] == [0, 1, 2, 3]
    assert all(d < 2 for _, d in res.peel_order)


def _unit_context(g: Graph, k: int, u_star: int) -> CoreEtaContext:
    return CoreEtaContext.from_vector(g, k, [Fraction(1)] * g.n, u_star)


def test_eta_examples():
    g = families.star(5)
    ctx = _unit_context(g, 3, 0)
    assert eta(ctx, []) == 0
    assert eta(ctx, [1]) == -2
    k7 = families.complete(7)
    ctx = _unit_context(k7, 3, 0)
    assert eta(ctx, range(1, 7)) == 3     # K_6 with unit weights: 6*3 - 15
    with pytest.raises(ValueError):
        eta(ctx, [0])


def test_decomposition_examples():
    ctx = decompose(families.star(5), 2)
    assert ctx.u_star == 0 and members(ctx.R) == [1, 2, 3, 4, 5] and ctx.S == 0
    ctx = decompose(families.extremal(3, 4).graph, 3)
    assert ctx.u_star in (0, 1, 2)
    assert ctx.R.bit_count() == 6 and ctx.S == 0
    ctx = decompose(families.cycle(5), 2)
    assert ctx.R.bit_count() == 2 and ctx.S.bit_count() == 2
    assert ctx.host.edges_within(ctx.S) == 1
    assert ctx.gamma == Fraction(-1)
    with pytest.raises(ValueError):
        decompose(disjoint_union(families.cycle(3), families.cycle(3)), 2)


def test_equality_graph_component_is_j2():
    g = families.extremal(3, 4).graph
    ctx = decompose(g, 3)
    comps = classify_components(ctx)
    assert len(comps) == 1
    comp = comps[0]
    assert comp.component == ctx.R
    sub = induced(g, ctx.R)                    # K_2 ∨ 4K_1
    assert max(oracles.all_cycle_lengths(sub)) == 4
    assert comp.circumference == 4 and comp.cls == "J2"
    assert comp.eta == pytest.approx(-3.0, abs=1e-9)


def test_star_has_no_components():
    assert classify_components(decompose(families.star(5), 3)) == []


def test_large_component_is_j1():
    g = join(families.complete(1), families.s_plus(9, 2).graph)
    comps = classify_components(decompose(g, 3))
    assert [c.cls for c in comps] == ["J1"]
    assert comps[0].component.bit_count() == 9


def test_j3_j4_j5_classes():
    # apex over C_5: circumference 5 = 2k-1 for k = 3
    ctx = _unit_context(join(families.complete(1), families.cycle(5)), 3, 0)
    assert [c.cls for c in classify_components(ctx)] == ["J3"]
    # apex over K_6 with unit weights: η = 3 > 0 → J5, t_J = 0
    ctx = _unit_context(families.complete(7), 3, 0)
    (comp,) = classify_components(ctx)
    assert (comp.cls, comp.t_J, comp.circumference) == ("J5", 0, 6)
    # small weights make η negative → J4
    x = [Fraction(1)] + [Fraction(1, 10)] * 6
    ctx = CoreEtaContext.from_vector(families.complete(7), 3, x, 0)
    (comp,) = classify_components(ctx)
    assert comp.cls == "J4" and comp.eta < 0


def test_eta_core_inequality_examples():
    g = join(families.complete(1), families.complete(4))
    ctx = _unit_context(g, 3, 0)
    cmp = eta_core_inequality(ctx, [1, 2, 3, 4])
    assert cmp.is_core and cmp.equal
    # add an isolated vertex to L: peeling it raises η by (k-1) x_u
    g = join(families.complete(1), disjoint_union(families.complete(4), Graph.empty(1)))
    ctx = _unit_context(g, 3, 0)
    cmp = eta_core_inequality(ctx, [1, 2, 3, 4, 5])
    assert not cmp.is_core and cmp.holds and not cmp.equal
    assert cmp.eta_core - cmp.eta_L == 2


def test_eta_core_inequality_random(rng):
    for _ in range(100):
        g = random_connected(rng, rng.randint(3, 11), rng.random() * 0.6)
        k = rng.choice((3, 4))
        ctx = decompose(g, k)
        R = members(ctx.R)
        for _ in range(5):
            L = as_mask(v for v in R if rng.random() < 0.6)
            cmp = eta_core_inequality(ctx, L)
            assert cmp.holds
            assert cmp.equal == cmp.is_core
            assert l_core(ctx, l_core(ctx, L)) == l_core(ctx, L)


@pytest.mark.parametrize("g, k", [
    (families.extremal(3, 4).graph, 3),
    (families.cycle(5), 2),
    (families.star(4), 1),
])
def test_slack_identity(g, k):
    rep = slack_report(decompose(g, k))
    assert rep.identity_residual <= 1e-6
    if g == families.extremal(3, 4).graph:
        assert rep.spectral_slack >= -1e-8
    if g == families.star(4):
        assert rep.lhs == pytest.approx(4.0)


def test_slack_identity_random(rng):
    for _ in range(60):
        g = random_connected(rng, rng.randint(2, 12), rng.random() * 0.5)
        rep = slack_report(decompose(g, rng.choice((1, 2, 3, 4))))
        assert rep.identity_residual <= 1e-6


@pytest.mark.parametrize("s, cases", [(2, 3 * 3), (3, 120 * 5)])
def test_path_lemma(s, cases):
    res = verify_path_lemma(s)
    assert res.holds and res.cases == cases and res.counterexample is None


def test_path_lemma_range():
    with pytest.raises(ValueError):
        verify_path_lemma(4)
