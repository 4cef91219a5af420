import random

import pytest

from coxtwist.complexity import (ComplexityValue, D_set, E_set, E_sets, angle_compatible_check,
                                 complexity, complexity_less, find_conjugator,
                                 minimize_complexity, partition_twist)
from coxtwist.errors import InconclusiveRadius, NotFound, NotSeparated, Unsupported
from coxtwist.graph import maximal_spherical_subsets
from coxtwist.instances import catalog
from coxtwist.marking import GeneratingSet
from coxtwist.twist import apply_twist_generators, enumerate_twists, twist_for

from oracles import ball_cell, ball_frame, oracle_complexity


def test_ordering():
    assert complexity_less((0, 5), (1, 0))
    assert complexity_less(ComplexityValue(1, 2), ComplexityValue(1, 3))
    assert not complexity_less((1, 0), (1, 0))


@pytest.mark.parametrize("name", ["Q3", "Q4", "Q5", "E1", "E3", "F4G"])
def test_reference_is_zero(name):
    assert complexity(GeneratingSet.reference(catalog(name))) == ComplexityValue(0, 0)


def test_twisted_q3_value(twisted_Q3):
    assert complexity(twisted_Q3) == ComplexityValue(4, 6)
    assert oracle_complexity(twisted_Q3, 8) == ComplexityValue(4, 6)


def test_cells_and_frames_match_oracle(twisted_Q3):
    from coxtwist.marking import cell_chambers

    for L in maximal_spherical_subsets(twisted_Q3.graph):
        cell = ball_cell(twisted_Q3, L, 8)
        assert sorted(cell) == sorted(cell_chambers(twisted_Q3, L))
        assert sorted(ball_frame(twisted_Q3, L, cell)) == sorted(D_set(twisted_Q3, L))


@pytest.mark.parametrize("name", ["Q3", "Q4", "Q5"])
def test_random_twists_match_oracle(name):
    S = GeneratingSet.reference(catalog(name))
    rng = random.Random(2)
    for _ in range(4):
        T = S
        for _ in range(rng.randrange(1, 3)):
            T = apply_twist_generators(T, rng.choice(enumerate_twists(T.graph)))
        value = complexity(T)
        radius = max(len(x) for x in T.elements) // 2 + 4
        assert value == oracle_complexity(T, radius)


def test_non_exposed_e_set():
    S = GeneratingSet.reference(catalog("E3"))
    D = D_set(S, "stp")
    E = E_set(S, "stp", "qt")
    assert len(D) == 2 and E == [S.engine.identity]
    assert E_set(S, "stp", "qt", cross_check=False) == E


def test_e_set_routes_agree_after_twists():
    S = GeneratingSet.reference(catalog("E3"))
    for tau in enumerate_twists(S.graph, max_J=2):
        T = apply_twist_generators(S, tau)
        sets = E_sets(T, cross_check=True)
        assert sets == E_sets(T, cross_check=False)
        for (L, I), Es in sets.items():
            assert set(Es) <= set(D_set(T, L))


def test_non_rigid_e_set_unsupported():
    G = catalog("E2")
    S = GeneratingSet.reference(G)
    T = apply_twist_generators(S, twist_for(G, "tp", "qx"))
    for U in (S, T):
        with pytest.raises(Unsupported):
            complexity(U)


def test_partition_twist(twisted_Q3, Q3):
    tau = partition_twist(twisted_Q3, "st")
    assert tau.B == frozenset("b")
    S2 = apply_twist_generators(twisted_Q3, tau)
    assert S2.key() == GeneratingSet.reference(Q3).key()
    assert complexity(S2) == ComplexityValue(0, 0)
    with pytest.raises(NotSeparated):
        partition_twist(GeneratingSet.reference(Q3), "st")


def test_minimize(twisted_Q3, Q3):
    res = minimize_complexity(twisted_Q3)
    assert res.value == ComplexityValue(0, 0) and res.complete
    assert [tau.describe(g) for tau, g in res.sequence] == ["J={s,t} B={b}"]
    res = minimize_complexity(GeneratingSet.reference(Q3))
    assert res.sequence == [] and res.value == ComplexityValue(0, 0)


def test_minimize_twisted_q5():
    G = catalog("Q5")
    S = apply_twist_generators(GeneratingSet.reference(G), twist_for(G, "st", "b"))
    assert complexity(S) != ComplexityValue(0, 0)
    res = minimize_complexity(S)
    assert res.value == ComplexityValue(0, 0)
    find_conjugator(res.generating_set, 8)


def test_find_conjugator(Q3, twisted_Q3):
    S = GeneratingSet.reference(Q3)
    assert find_conjugator(S).is_identity()
    E = S.engine
    g = E.element("st")
    T = GeneratingSet(E, S.labels, tuple(E.conjugate(g, x) for x in S.elements), S.graph)
    w = find_conjugator(T)
    assert len(w) == 2 and E.multiply(w, g).is_identity()
    with pytest.raises(NotFound):
        find_conjugator(twisted_Q3, 6)


def test_angle_compatible(Q3, twisted_Q3):
    S = GeneratingSet.reference(Q3)
    assert angle_compatible_check(S)
    assert angle_compatible_check(twisted_Q3)
    # a and s a s commute, and no reference pair carries label 2
    bad = GeneratingSet.from_words(S.engine, {"x": "a", "y": "s a s"})
    assert not angle_compatible_check(bad)
    far = GeneratingSet.from_words(S.engine, {"x": "t s a s t", "y": "t s t"})
    with pytest.raises(InconclusiveRadius):
        angle_compatible_check(far, radius=1)
