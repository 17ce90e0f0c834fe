import math

import numpy as np
import pytest

from spectral_extrema import families
from spectral_extrema.graph import Graph, add_edge, disjoint_union
from spectral_extrema.spectral import (BoundSpec, ConvergenceError, bound_value, compare_strict,
                                       equality_check, full_spectrum, jacobi_eigenvalues, power_trace,
                                       rayleigh_quotient, spectral_radius, trace_inequality)
from conftest import random_connected, random_graph


def test_regular_and_complete():
    assert spectral_radius(families.cycle(5)).lambda1 == pytest.approx(2.0, abs=1e-12)
    for n in range(2, 9):
        assert spectral_radius(families.complete(n)).lambda1 == pytest.approx(n - 1, abs=1e-10)


def test_equality_graph_closed_form():
    res = spectral_radius(families.extremal(3, 4).graph)
    assert res.lambda1 == pytest.approx((2 + math.sqrt(52)) / 2, abs=1e-10)
    assert res.lambda1 == pytest.approx(full_spectrum(families.extremal(3, 4).graph)[0], abs=1e-10)
    assert res.u_star == 0


def test_perron_vector_is_normalised_eigenvector(rng):
    for _ in range(30):
        g = random_connected(rng, rng.randint(2, 12), 0.3)
        res = spectral_radius(g)
        x = np.array(res.perron)
        assert max(x) == pytest.approx(1.0)
        assert (x > 0).all()
        assert np.abs(g.to_numpy() @ x - res.lambda1 * x).max() <= 1e-9
        assert res.residual <= 1e-12


def test_bipartite_graphs_converge():
    for g in (families.path(6), families.complete_bipartite(3, 4), families.cycle(8)):
        ref = np.linalg.eigvalsh(g.to_numpy())[-1]
        assert spectral_radius(g).lambda1 == pytest.approx(ref, abs=1e-10)


def test_disconnected_graph_uses_largest_component():
    g = disjoint_union(families.path(3), families.complete(4))
    res = spectral_radius(g)
    assert res.lambda1 == pytest.approx(3.0)
    assert res.perron[:3] == (0.0, 0.0, 0.0)
    assert spectral_radius(Graph.empty(3)).lambda1 == 0.0
    with pytest.raises(ValueError):
        spectral_radius(Graph.empty(0))


def test_convergence_failure_is_reported():
    with pytest.raises(ConvergenceError) as info:
        spectral_radius(families.path(30), max_iter=3)
    assert info.value.residual > 0


@pytest.mark.parametrize("g, expected", [
    (families.path(2), [1, -1]),
    (families.cycle(4), [2, 0, 0, -2]),
    (families.complete_bipartite(2, 3), [math.sqrt(6), 0, 0, 0, -math.sqrt(6)]),
])
def test_full_spectrum_examples(g, expected):
    assert full_spectrum(g) == pytest.approx(expected, abs=1e-10)


def test_jacobi_matches_eigen_identities(rng):
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 14), rng.random())
        spec = np.array(full_spectrum(g))
        assert spec.sum() == pytest.approx(0, abs=1e-9)                # trace A
        assert (spec ** 2).sum() == pytest.approx(2 * g.m, abs=1e-8)    # trace A^2
        assert np.allclose(np.sort(spec), np.linalg.eigvalsh(g.to_numpy()), atol=1e-9)


def test_jacobi_on_general_symmetric_matrix():
    a = np.array([[4.0, 1, 2], [1, 3, 0], [2, 0, 5]])
    assert np.allclose(jacobi_eigenvalues(a), np.linalg.eigvalsh(a)[::-1], atol=1e-12)


def test_power_trace(rng):
    assert power_trace(families.cycle(4), 4).value == 32
    assert power_trace(families.complete(3), 2).value == 6
    for _ in range(20):
        g = random_graph(rng, rng.randint(1, 10), 0.5)
        assert power_trace(g, 2).value == 2 * g.m
        rep = power_trace(g, 6)
        assert rep.discrepancy <= 1e-6 * max(1, rep.by_walks)
    with pytest.raises(ValueError):
        power_trace(families.cycle(4), 3)


def test_trace_inequality():
    assert trace_inequality(families.cycle(7), 2).holds
    with pytest.raises(ValueError):
        trace_inequality(families.cycle(5), 2)


def test_bound_values():
    assert bound_value(BoundSpec("fan_theorem", 15, k=3)) == pytest.approx((2 + math.sqrt(52)) / 2)
    for m in (1, 7, 20):
        assert bound_value(BoundSpec("fan_theorem", m, k=1)) == pytest.approx(math.sqrt(m))
    assert bound_value(BoundSpec("friendship_f23", 9)) == pytest.approx((1 + math.sqrt(33)) / 2)
    assert bound_value(BoundSpec("nosal", 9)) == 3.0
    assert bound_value(BoundSpec("lnw", 5)) == 2.0
    assert bound_value(BoundSpec("nikiforov", 10, r=2)) == pytest.approx(math.sqrt(10))
    with pytest.raises(ValueError):
        BoundSpec("nope", 3)


@pytest.mark.parametrize("m", range(1, 30))
def test_brualdi_hoffman_value_matches_graph(m):
    a, b = families.bh_parameters(m)
    lam = full_spectrum(families.bh_graph(a, b))[0]
    assert bound_value(BoundSpec("brualdi_hoffman", m)) == pytest.approx(lam, abs=1e-10)


def test_equality_check_examples():
    assert equality_check(3, 4).ok
    rep = equality_check(2, 5)
    assert rep.m == 11
    assert rep.lambda1 == pytest.approx(bound_value(BoundSpec("friendship_f23", 11)), abs=1e-10)
    star = equality_check(1, 9)
    assert star.lambda1 == pytest.approx(3.0)


def test_rayleigh_quotient_is_a_lower_bound(rng):
    for _ in range(30):
        g = random_graph(rng, 8, 0.5)
        y = np.array([rng.random() + 0.01 for _ in range(8)])
        assert rayleigh_quotient(g, y) <= spectral_radius(g).lambda1 + 1e-12


def test_adding_an_edge_increases_radius(rng):
    for _ in range(30):
        g = random_connected(rng, 8, 0.2)
        missing = list(g.non_edges())
        if not missing:
            continue
        u, v = missing[rng.randrange(len(missing))]
        assert spectral_radius(add_edge(g, u, v)).lambda1 > spectral_radius(g).lambda1 + 1e-10


def test_compare_strict():
    assert compare_strict(1.0, 1.0 + 1e-12) == "inconclusive"
    assert compare_strict(1.1, 1.0) == "greater"
    assert compare_strict(1.0, 1.1) == "less"


def test_second_eigenvalue_is_lazy():
    res = spectral_radius(families.cycle(5))
    assert "lambda2" not in res.__dict__
    assert res.lambda2 == pytest.approx(2 * math.cos(2 * math.pi / 5))


def test_trace_inequality_sole_exception_is_k2():
    from spectral_extrema.patterns import odd_girth
    from spectral_extrema.search import graphs_of_order

    failures = []
    for n in range(1, 8):
        for g in graphs_of_order(n):
            og = odd_girth(g)
            if og is None or og[0] > 5:
                if not trace_inequality(g, 2).holds:
                    failures.append(g)
    # K_2: spectrum {1, -1}, so λ₁⁴ + λ₂⁴ = 2 > Tr(A⁴)/2 = 1
    assert failures == [families.path(2)]
