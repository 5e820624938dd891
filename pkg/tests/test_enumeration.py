import pytest
from hypothesis import given
from hypothesis import strategies as st

from modcomp.bdh import is_bipartite
from modcomp.enumeration import (
    FAMILIES,
    all_graphs,
    bipartite_codes,
    code_to_masks,
    cograph_codes,
    cographs,
    masks_to_code,
)
from modcomp.graph import Graph
from modcomp.oracles import class_membership


@given(st.integers(0, 7).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, (1 << (n * (n - 1) // 2)) - 1))))
def test_code_roundtrip(pair):
    n, code = pair
    masks = code_to_masks(code, n)
    Graph.from_masks(masks)  # symmetric, loop-free
    assert masks_to_code(masks) == code


@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 2), (3, 8), (4, 64), (5, 1024)])
def test_all_graph_counts(n, count):
    assert sum(1 for _ in all_graphs(n)) == count


@pytest.mark.parametrize("n", range(0, 7))
def test_bipartite_family_is_the_bipartite_filter(n):
    expected = sorted(masks_to_code(m) for m in all_graphs(n) if is_bipartite(Graph.from_masks(m)) is not None)
    assert bipartite_codes(n) == expected


@pytest.mark.parametrize("n", range(0, 7))
def test_cograph_family_is_the_cograph_filter(n):
    expected = sorted(masks_to_code(m) for m in all_graphs(n) if class_membership(Graph.from_masks(m), "cograph"))
    codes = list(cograph_codes(n))
    assert len(codes) == len(set(codes))
    assert sorted(codes) == expected


def test_cograph_counts_grow_as_expected():
    # labeled cographs: each count equals the exhaustive filter above for n <= 6
    assert [sum(1 for _ in cograph_codes(n)) for n in range(1, 8)] == [1, 2, 8, 52, 472, 5504, 78416]


def test_families_yield_masks():
    for name, family in FAMILIES.items():
        for masks in family(4):
            assert len(masks) == 4
    assert all(class_membership(Graph.from_masks(m), "cograph") for m in cographs(5))
