import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from annigraph.errors import NotThreshold
from annigraph.graph import Graph, build_graph, degree_sequence
from annigraph.groups import cyclic, make_group
from annigraph.threshold import (CreationSequence, IntPartition, clique_independent_split,
                                 closed_form_creation_sequence, conjugate, find_alternating_4cycle,
                                 graph_from_creation_sequence, laplacian_multiplicity_table,
                                 laplacian_spectrum_threshold, peel_creation_sequence)

P4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
C4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


def _is_witness(g, w):
    a, b, c, d = w
    return (len({a, b, c, d}) == 4 and g.has_edge(a, b) and g.has_edge(c, d)
            and not g.has_edge(a, c) and not g.has_edge(b, d))


@pytest.mark.parametrize("method", ["vicinal", "naive"])
def test_alternating_4cycle_examples(method):
    assert find_alternating_4cycle(build_graph(cyclic(8)), method) is None
    for g in (P4, C4, Graph.from_edges(4, [(0, 1), (2, 3)])):
        assert _is_witness(g, find_alternating_4cycle(g, method))


def test_naive_is_deterministic_and_earliest():
    assert find_alternating_4cycle(P4, "naive") == (0, 1, 2, 3)


def _random_graph(rng, n):
    kind = rng.random()
    if kind < 0.4:
        return graph_from_creation_sequence([rng.randint(0, 1) for _ in range(n)])
    p = rng.random()
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def test_methods_agree_with_peeling_on_random_graphs():
    rng = random.Random(2024)
    for _ in range(200):
        g = _random_graph(rng, rng.randint(1, 14))
        vic, naive = find_alternating_4cycle(g, "vicinal"), find_alternating_4cycle(g, "naive")
        try:
            peel_creation_sequence(g)
            peeled = True
        except NotThreshold:
            peeled = False
        assert (vic is None) == (naive is None) == peeled
        for w in (vic, naive):
            assert w is None or _is_witness(g, w)


def test_peel_examples():
    assert str(peel_creation_sequence(build_graph(make_group([2, 2])))) == "0111"
    star = Graph.from_edges(5, [(0, i) for i in range(1, 5)])
    assert str(peel_creation_sequence(star)) == "00001"
    with pytest.raises(NotThreshold):
        peel_creation_sequence(P4)


def test_closed_form_examples():
    assert str(closed_form_creation_sequence(2, 1)) == "01"
    for p in (3, 5, 7):
        assert str(closed_form_creation_sequence(p, 2)) == "0" + "1" * (p - 2) + "0" * (p * p - p) + "1"
    w = closed_form_creation_sequence(2, 3)
    assert len(w) == 8 and degree_sequence(graph_from_creation_sequence(w)) == [7, 3, 2, 2, 1, 1, 1, 1]


@pytest.mark.parametrize("p,alpha", [(2, a) for a in range(1, 10)] + [(3, a) for a in range(1, 6)]
                         + [(5, 1), (5, 2), (5, 3), (7, 2), (7, 3), (11, 2)])
def test_closed_form_degree_sequence(p, alpha):
    g = build_graph(cyclic(p**alpha))
    w = closed_form_creation_sequence(p, alpha)
    assert len(w) == p**alpha and w.is_connected()
    assert degree_sequence(graph_from_creation_sequence(w)) == degree_sequence(g)
    assert degree_sequence(graph_from_creation_sequence(peel_creation_sequence(g))) == degree_sequence(g)


@pytest.mark.parametrize("p,alpha", [(2, 4), (2, 5), (3, 3), (3, 4), (5, 2), (7, 3)])
def test_clique_independent_split(p, alpha):
    g = build_graph(cyclic(p**alpha))
    indep, clique = clique_independent_split(p, alpha)
    assert all(not g.has_edge(u, v) for u in indep for v in indep)
    assert all(g.has_edge(u, v) for u in clique for v in clique if u != v)


def test_creation_sequence_type():
    c = CreationSequence.from_string("0101")
    assert len(c) == 4 and c.is_connected() and not CreationSequence.from_string("0110").is_connected()
    with pytest.raises(ValueError):
        CreationSequence((0, 2))


def test_conjugate_examples():
    assert conjugate([15, 7, 3, 3, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1]).parts == (16, 8, 4, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1)
    assert conjugate([3, 2, 1]).parts == (3, 2, 1)
    assert conjugate([]).parts == ()


@settings(max_examples=1000, deadline=None)
@given(st.lists(st.integers(0, 30), max_size=25))
def test_conjugate_involution_and_box_count(xs):
    x = IntPartition(tuple(xs))
    assert x.conjugate().conjugate() == x.nonzero()
    assert x.conjugate().size == x.size


def test_laplacian_examples():
    assert laplacian_spectrum_threshold(build_graph(cyclic(16))) == [16, 8, 4, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 0]
    assert laplacian_spectrum_threshold(build_graph(make_group([2, 2]))) == [4, 4, 4, 0]
    assert laplacian_spectrum_threshold(build_graph(cyclic(3))) == [3, 1, 0]
    with pytest.raises(NotThreshold):
        laplacian_spectrum_threshold(P4)


def test_multiplicity_table_examples():
    assert laplacian_multiplicity_table(2, 4) == {16: 1, 8: 1, 4: 1, 2: 4, 1: 8, 0: 1}
    for p in (3, 5, 7, 11):
        assert laplacian_multiplicity_table(p, 1) == {p: 1, 1: p - 2, 0: 1}


@pytest.mark.parametrize("p,alpha", [(2, a) for a in range(1, 9)] + [(3, a) for a in range(1, 6)] + [(5, 3), (7, 2)])
def test_multiplicity_table_matches_conjugate(p, alpha):
    g = build_graph(cyclic(p**alpha))
    table = laplacian_multiplicity_table(p, alpha)
    assert Counter(laplacian_spectrum_threshold(g)) == Counter(table)
    assert sum(table.values()) == p**alpha
    assert sum(v * m for v, m in table.items()) == 2 * g.num_edges
    expected = {0, 1} | {p**i for i in range(1, alpha + 1)}
    if (p, alpha) == (2, 1):
        assert set(table) == {0, 2}  # K_2: no eigenvalue 1
    elif (p, alpha) == (2, 2):
        assert set(table) == {0, 1, 4}  # K_{1,3}: no eigenvalue 2
    else:
        assert set(table) == expected
