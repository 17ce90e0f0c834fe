import itertools
import random

import pytest

from spectral_extrema import families, oracles
from spectral_extrema.canon import canonical_form, canonical_graph, canonical_labelling, is_isomorphic
from spectral_extrema.graph import join, relabel
from spectral_extrema.search import graphs_of_order
from conftest import random_graph


def test_cycle_invariant_under_every_relabelling():
    c5 = families.cycle(5)
    forms = {canonical_form(relabel(c5, list(p))) for p in itertools.permutations(range(5))}
    assert len(forms) == 1


def test_distinguishes_p4_and_star():
    assert canonical_form(families.path(4)) != canonical_form(families.star(3))


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156), (7, 1044)])
def test_census_of_orders(n, count):
    forms = [canonical_form(g) for g in graphs_of_order(n)]
    assert len(forms) == len(set(forms)) == count


def test_matches_permutation_oracle(rng):
    for _ in range(150):
        n = rng.randint(1, 7)
        g, h = random_graph(rng, n, rng.random()), random_graph(rng, n, rng.random())
        same_code = oracles.permutation_codes_numpy(g) == oracles.permutation_codes_numpy(h)
        assert (canonical_form(g) == canonical_form(h)) == same_code


def test_invariance_on_larger_graphs(rng):
    for _ in range(40):
        g = random_graph(rng, rng.randint(8, 14), rng.random())
        order = list(range(g.n))
        rng.shuffle(order)
        assert canonical_form(relabel(g, order)) == canonical_form(g)


def test_canonical_graph_is_a_relabelling(rng):
    g = random_graph(rng, 9, 0.4)
    lab = canonical_labelling(g)
    assert sorted(lab.order) == list(range(9))
    assert canonical_graph(g) == relabel(g, list(lab.order))
    for gen in lab.generators:
        assert relabel(g, list(gen)) == g


def test_highly_symmetric_graph_is_fast():
    g = join(families.complete(5), families.empty(50))
    order = list(range(g.n))
    random.Random(1).shuffle(order)
    assert is_isomorphic(g, relabel(g, order))
