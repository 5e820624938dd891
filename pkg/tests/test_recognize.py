import random
from itertools import permutations

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from modcomp.enumeration import all_graphs
from modcomp.errors import SizeGuardError
from modcomp.generators import random_module_composed
from modcomp.graph import Graph, clique, cycle, delete_vertices, disjoint_union, gem, named_graph, path, star
from modcomp.oracles import contains_induced, contains_sun, has_hole
from modcomp.recognize import (
    brute_force_recognize,
    recognize,
    verify_independent_module_sequence,
    verify_module_sequence,
)

from conftest import graphs


def test_verify_examples():
    assert verify_module_sequence(Graph.empty(1), [0])
    assert verify_module_sequence(path(4), [0, 1, 2, 3])
    assert not any(verify_module_sequence(named_graph("house"), p) for p in permutations(range(5)))


def test_verify_rejects_non_permutations():
    with pytest.raises(ValueError):
        verify_module_sequence(path(3), [0, 1])
    with pytest.raises(ValueError):
        verify_module_sequence(path(3), [0, 1, 1])


def test_verify_independent_examples():
    # tree in BFS order from its root
    tree = Graph.from_edges(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (5, 6)])
    assert verify_independent_module_sequence(tree, [0, 1, 2, 3, 4, 5, 6])
    assert not verify_independent_module_sequence(gem(), [0, 1, 2, 3, 4])
    assert verify_module_sequence(gem(), [0, 1, 2, 3, 4])
    assert verify_independent_module_sequence(cycle(4), [0, 2, 1, 3])


def test_verify_catches_a_broken_prefix():
    # 2 arrives last and sees {1, 3}, which vertex 0 tells apart
    assert not verify_module_sequence(path(4), [0, 3, 1, 2])


@pytest.mark.parametrize("name", ["C5", "C6", "C7", "coC6", "house", "domino", "co_K33_minus_e", "co_2C4", "k_sun3"])
def test_named_no(name):
    g = named_graph(name)
    assert not recognize(g)
    if g.n <= 8:
        assert not brute_force_recognize(g)


@pytest.mark.parametrize("name", ["C4", "P4", "gem", "K5", "star4"])
def test_named_yes(name):
    g = named_graph(name)
    result = recognize(g)
    assert result.is_module_composed
    assert verify_module_sequence(g, result.sequence)


def test_all_four_vertex_graphs_are_module_composed():
    for masks in all_graphs(4):
        g = Graph.from_masks(masks)
        assert brute_force_recognize(g)
        assert recognize(g)


def test_brute_force_guard():
    with pytest.raises(SizeGuardError):
        brute_force_recognize(Graph.empty(13))


def test_empty_and_single_vertex():
    assert recognize(Graph.empty(0)).sequence == ()
    assert recognize(Graph.empty(1)).sequence == (0,)


@given(graphs(max_n=9))
def test_recognize_agrees_with_brute_force(g):
    fast = recognize(g)
    slow = brute_force_recognize(g)
    assert fast.is_module_composed == slow.is_module_composed
    if fast:
        assert verify_module_sequence(g, fast.sequence)
        assert verify_module_sequence(g, slow.sequence)


@given(graphs(max_n=8))
def test_independent_brute_force_is_stricter(g):
    ind = brute_force_recognize(g, independent=True)
    if ind:
        assert verify_independent_module_sequence(g, ind.sequence)
        assert brute_force_recognize(g)


@given(st.integers(1, 10), st.integers(0, 10**6))
def test_hereditary(n, seed):
    g, _ = random_module_composed(n, seed)
    for v in range(n):
        sub, _ = delete_vertices(g, [v])
        assert recognize(sub)


@given(st.integers(1, 8), st.integers(1, 8), st.integers(0, 10**6))
def test_union_closure(n1, n2, seed):
    g1, s1 = random_module_composed(n1, seed)
    g2, s2 = random_module_composed(n2, seed + 1)
    g = disjoint_union(g1, g2)
    assert recognize(g)
    assert verify_module_sequence(g, list(s1) + [v + n1 for v in s2])


@given(graphs(max_n=8))
def test_yes_graphs_avoid_house_hole_domino_sun(g):
    assume(recognize(g))
    assert has_hole(g) is None
    assert contains_sun(g) is None
    for name in ("house", "domino"):
        assert contains_induced(g, named_graph(name)) is None


def test_disconnected_sequence_is_component_concatenation():
    g = disjoint_union(path(3), clique(3))
    seq = recognize(g).sequence
    assert set(seq[:3]) == {0, 1, 2}
    assert verify_module_sequence(g, seq)


def test_larger_generated_graphs():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randint(20, 150)
        g, seq = random_module_composed(n, rng.randrange(10**9))
        assert verify_module_sequence(g, seq)
        result = recognize(g)
        assert result and verify_module_sequence(g, result.sequence)


def test_trees_and_stars():
    assert recognize(star(7))
    rng = random.Random(2)
    for n in range(2, 40):
        edges = [(v, rng.randrange(v)) for v in range(1, n)]
        assert recognize(Graph.from_edges(n, edges))


def test_large_cycle_is_rejected():
    assert not recognize(cycle(40))
