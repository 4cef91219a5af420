from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from coxtwist.errors import InputError, NotFC
from coxtwist.graph import (DefiningGraph, classify, complement_components, components_of, is_fc,
                            is_irreducible, is_spherical, longest_element, maximal_spherical_subsets,
                            opposition, perp, spherical_subsets)
from coxtwist.instances import CATALOG, catalog

from conftest import dihedral
from oracles import gram_positive_definite, matrix_group_order


def sets(*xs):
    return [frozenset(x) for x in xs]


def test_components():
    assert components_of(catalog("Q3"), "ab") == sets("a", "b")
    assert components_of(catalog("Q3"), "ast") == sets("ast")
    assert components_of(catalog("E2"), "sqx") == sets("s", "q", "x")


def test_perp():
    E1 = catalog("E1")
    assert perp(E1, "t") == frozenset()
    assert perp(E1, "s") == frozenset("p")
    assert perp(catalog("Q3"), "st") == frozenset()


def test_irreducible():
    E1 = catalog("E1")
    assert is_irreducible(E1, "stp")
    assert not is_irreducible(E1, "sp")
    assert is_irreducible(catalog("Q3"), "ab")


def test_classify_examples():
    assert str(classify(catalog("E1"), "stp")) == "Finite(A,3)"
    assert str(classify(catalog("F4G"), "ustp")) == "Finite(F4,4)"
    assert not classify(catalog("Q4"), "ast").is_finite


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_dihedral_orders(m):
    assert classify(dihedral(m), "st").order == 2 * m


@pytest.mark.parametrize("edges,order", [
    ([("a", "b", 3), ("b", "c", 3)], 24),
    ([("a", "b", 3), ("b", "c", 4)], 48),
    ([("a", "b", 3), ("b", "c", 5)], 120),
])
def test_rank3_orders(edges, order):
    G = DefiningGraph.from_edges("abc", edges + [("a", "c", 2)])
    assert classify(G, "abc").order == order
    assert matrix_group_order(G, "abc") == order


def test_f4_order():
    assert classify(catalog("F4G"), "ustp").order == 1152


def test_fc():
    assert is_fc(catalog("Q3"))
    assert not is_fc(catalog("TRI333"))
    assert is_fc(catalog("E1"))
    with pytest.raises(NotFC):
        maximal_spherical_subsets(catalog("TRI333"))


def test_maximal_spherical():
    assert maximal_spherical_subsets(catalog("Q3")) == sets("as", "st", "tb")
    assert sorted(map(sorted, maximal_spherical_subsets(catalog("E1")))) == [["p", "s", "t"], ["q", "t"]]
    single = DefiningGraph.from_edges(["x"], [])
    assert maximal_spherical_subsets(single) == sets("x")


def test_longest():
    assert len(longest_element(dihedral(3), "st")) == 3
    assert len(longest_element(catalog("E1"), "stp")) == 6
    assert len(longest_element(catalog("F4G"), "ustp")) == 24


def test_opposition():
    assert opposition(dihedral(3), "st") == {"s": "t", "t": "s"}
    assert opposition(dihedral(4), "st") == {"s": "s", "t": "t"}
    assert opposition(catalog("E1"), "stp") == {"s": "p", "t": "t", "p": "s"}


def test_complement_components():
    assert complement_components(catalog("Q3"), "st") == sets("a", "b")
    assert complement_components(catalog("E2"), "stp") == sets("q", "x")


def test_invalid_graph():
    with pytest.raises(InputError):
        DefiningGraph.from_edges("ab", [("a", "b", 1)])
    with pytest.raises(InputError):
        DefiningGraph.from_edges("ab", [("a", "c", 3)])


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_classify_against_oracles(name):
    """Every subset: classification agrees with enumeration (cap 5000) and, up to rank 4, Gram PD."""
    G = catalog(name)
    for k in range(1, len(G.generators) + 1):
        for J in combinations(G.generators, k):
            t = classify(G, J)
            order = matrix_group_order(G, J, cap=5000)
            if t.is_finite and t.order <= 5000:
                assert order == t.order, (J, t)
            elif not t.is_finite:
                assert order is None, (J, t)
            if k <= 4:
                assert gram_positive_definite(G, J) == t.is_finite, J


labels = st.sampled_from([2, 3, 4, 5, 6, None])


@given(st.lists(labels, min_size=6, max_size=6))
def test_classify_random_rank4(assign):
    gens = "abcd"
    pairs = list(combinations(gens, 2))
    G = DefiningGraph.from_edges(gens, [(u, v, m) for (u, v), m in zip(pairs, assign) if m])
    for k in range(1, 5):
        for J in combinations(gens, k):
            assert gram_positive_definite(G, J) == is_spherical(G, J)


@given(st.lists(labels, min_size=3, max_size=3))
def test_spherical_subsets_closed_downward(assign):
    G = DefiningGraph.from_edges("abc", [(u, v, m) for (u, v), m in zip(combinations("abc", 2), assign) if m])
    sph = set(spherical_subsets(G))
    for J in sph:
        for x in J:
            if len(J) > 1:
                assert J - {x} in sph
