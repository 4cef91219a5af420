"""Acceptance criteria, one test each, timed against the stated limits.

Every test prints a single ``ACCEPTANCE <n> PASS|FAIL`` line with its
elapsed time, whether it passes or not.
"""

import random
import time
from contextlib import contextmanager
from itertools import combinations

import pytest

from coxtwist import checks
from coxtwist.complexity import (ComplexityValue, complexity, find_conjugator, minimize_complexity,
                                 partition_twist)
from coxtwist.davis import Wall, residue_distance, side_of_wall
from coxtwist.errors import Unsupported
from coxtwist.f4 import f4_root_identity
from coxtwist.graph import DefiningGraph, classify, is_fc, maximal_spherical_subsets
from coxtwist.instances import CATALOG, catalog
from coxtwist.marking import GeneratingSet, cell_of, doubles_consistent, peripheral_doubles
from coxtwist.twist import apply_twist_generators, enumerate_twists, is_k_rigid, twist_for
from coxtwist.words import engine_for

from oracles import braid_perturb, gram_positive_definite, matrix_group_order, oracle_complexity


@contextmanager
def criterion(capsys, n, title, limit):
    """Time the body, fail past ``limit`` seconds and print one status line."""
    notes = []
    start = time.perf_counter()
    status = "FAIL"
    try:
        yield notes
        elapsed = time.perf_counter() - start
        assert elapsed < limit, f"took {elapsed:.1f} s, limit {limit} s"
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - start
        extra = f"  [{'; '.join(notes)}]" if notes else ""
        with capsys.disabled():
            print(f"\nACCEPTANCE {n:>2} {status}  {title}  ({elapsed:.1f} s, limit {limit} s){extra}")


def test_01_f4_roots(capsys):
    with criterion(capsys, 1, "F4 root identities over the rationals", 1) as notes:
        rep = f4_root_identity(strict=False)
        assert rep.ok, [name for name, ok in rep.checks if not ok]
        notes.append(f"{len(rep.checks)} exact checks")


def test_02_classification(capsys):
    with criterion(capsys, 2, "classification vs enumeration and Gram oracles", 60) as notes:
        subsets = 0
        for name in CATALOG:
            G = catalog(name)
            assert len(G.generators) <= 6
            for k in range(1, len(G.generators) + 1):
                for J in combinations(G.generators, k):
                    subsets += 1
                    t = classify(G, J)
                    order = matrix_group_order(G, J, cap=5000)
                    if t.is_finite:
                        assert t.order > 5000 or order == t.order, (name, J, t)
                    else:
                        assert order is None, (name, J, t)
                    if k <= 4:
                        assert gram_positive_definite(G, J) == t.is_finite, (name, J)
        known = [(DefiningGraph.from_edges("st", [("s", "t", m)]), 2 * m) for m in range(3, 7)]
        known.append((DefiningGraph.from_edges("st", []), None))
        known.append((DefiningGraph.from_edges("abc", [("a", "b", 3), ("b", "c", 3), ("a", "c", 2)]), 24))
        known.append((DefiningGraph.from_edges("abc", [("a", "b", 3), ("b", "c", 4), ("a", "c", 2)]), 48))
        known.append((DefiningGraph.from_edges("abc", [("a", "b", 3), ("b", "c", 5), ("a", "c", 2)]), 120))
        known.append((catalog("F4G"), 1152))
        # I2(2): commuting pair
        known.append((DefiningGraph.from_edges("st", [("s", "t", 2)]), 4))
        for G, order in known:
            t = classify(G, G.generators)
            if order is None:
                assert not t.is_finite
                continue
            assert t.order == order and matrix_group_order(G, G.generators) == order
        notes.append(f"{subsets} subsets, {len(known)} known orders")


def test_03_word_engine(capsys):
    with criterion(capsys, 3, "word engine under braid perturbations, parity and wall crossing", 60) as notes:
        rng = random.Random(0)
        perturbed = crossings = 0
        for name in CATALOG:
            G = catalog(name)
            E = engine_for(G)
            n = len(G.generators)
            for _ in range(1000):
                x = E.from_word([rng.randrange(n) for _ in range(rng.randrange(1, 16))])
                assert E.kernel.reduce(braid_perturb(G, x.word, rng, 4)) == x.word, (name, x)
                perturbed += 1
            ball = E.enumerate_ball(6)
            for x in ball:
                # walls separating x from the identity: one per letter, all distinct
                walls, prefix = set(), E.identity
                for g in x.letters:
                    walls.add(Wall(E.conjugate(prefix, E.generator(g))))
                    prefix = E.multiply(prefix, E.generator(g))
                assert len(walls) == len(x) and not any(side_of_wall(x, W) for W in walls)
                for g in E.generators():
                    y = E.multiply(x, g)
                    crossings += 1
                    assert len(y) % 2 != len(x) % 2
                    crossing = Wall(E.conjugate(x, g))
                    assert side_of_wall(x, crossing) != side_of_wall(y, crossing)
        notes.append(f"{perturbed} perturbed words, {crossings} gallery steps")


def test_04_move_invariance(capsys):
    with criterion(capsys, 4, "marking halfspaces invariant under M1/M2 moves", 120) as notes:
        res = checks.check_move_invariance(("Q3", "Q4", "Q5", "E1"))
        notes.append(f"{res.checked} move edges, {len(res.failures)} exceptions")
        assert res.ok, res.failures[:5]


def test_05_same_component(capsys):
    with criterion(capsys, 5, "same-component simple markings are move-equivalent", 120) as notes:
        res = checks.check_same_component()
        notes.append(f"{res.checked} marking pairs on {', '.join(checks.rigid_instances())}")
        assert res.ok, res.failures[:5]


def test_06_good_exposed(capsys):
    with criterion(capsys, 6, "good pairs have a good element; no good pair forces exposure", 60) as notes:
        res = checks.check_good_exposed()
        notes.append(f"{res.checked} cases, {len(res.failures)} exceptions")
        assert res.ok, res.failures[:5]


def test_07_twists(capsys):
    with criterion(capsys, 7, "twist labels, FC invariance and exposure preservation", 120) as notes:
        res = checks.check_twists()
        notes.append(f"{res.checked} checks over {len(CATALOG)} catalog instances")
        assert res.ok, res.failures[:5]


@pytest.mark.slow
def test_08_folding_lemma(capsys):
    with criterion(capsys, 8, "folded maps contract, equality per the injective-path criterion", 300) as notes:
        res = checks.check_fold_lemma(radius=6)
        notes.append(f"{res.checked} chamber pairs, {len(res.failures)} exceptions")
        assert res.ok, res.failures[:5]


def test_09_complexity(capsys):
    with criterion(capsys, 9, "complexity of references, twisted Q3 and the partition twist", 300) as notes:
        outside = []
        for name in CATALOG:
            G = catalog(name)
            if not is_fc(G):
                outside.append(f"{name} not FC")
                continue
            S = GeneratingSet.reference(G)
            if not is_k_rigid(G, 3):
                # K1 is defined without rigidity; the E-sets behind K2 are not
                Ms = maximal_spherical_subsets(G)
                assert all(residue_distance(cell_of(S, L), cell_of(S, I)) == 0
                           for L, I in combinations(Ms, 2))
                with pytest.raises(Unsupported):
                    complexity(S)
                outside.append(f"{name} not 3-rigid, K1=0")
                continue
            assert complexity(S) == ComplexityValue(0, 0), name
        G = catalog("Q3")
        T = apply_twist_generators(GeneratingSet.reference(G), twist_for(G, "st", "b"))
        value = complexity(T)
        assert value == oracle_complexity(T, 8) == ComplexityValue(4, 6)
        assert not doubles_consistent(T, "st")
        assert peripheral_doubles(T) == [frozenset("st")]
        tau = partition_twist(T, "st")
        after = complexity(apply_twist_generators(T, tau))
        assert after < value
        notes.append(f"twisted Q3 {value} -> {after}; outside hypotheses: {', '.join(outside)}")


def test_10_end_to_end(capsys):
    with criterion(capsys, 10, "random twists, minimise to (0,0), conjugate back within radius 8", 600) as notes:
        rng = random.Random(2024)
        for name in ("Q3", "Q4", "Q5"):
            S0 = GeneratingSet.reference(catalog(name))
            E = S0.engine
            for trial in range(4):
                T = S0
                if trial == 3:
                    # a conjugated start makes the conjugator search non-trivial
                    g = E.from_word([rng.randrange(len(E.graph.generators)) for _ in range(3)])
                    T = GeneratingSet(E, S0.labels, tuple(E.conjugate(g, x) for x in S0.elements), S0.graph)
                depth = rng.randint(1, 3)
                for _ in range(depth):
                    T = apply_twist_generators(T, rng.choice(enumerate_twists(T.graph)))
                start = complexity(T)
                res = minimize_complexity(T)
                assert res.value == ComplexityValue(0, 0), (name, trial, res.value)
                w = find_conjugator(res.generating_set, 8)
                assert {E.conjugate(w, x) for x in res.generating_set.elements} == set(E.generators())
                notes.append(f"{name}#{trial} depth {depth} {start} -> (0, 0) in {len(res.sequence)} twists, w={w}")
