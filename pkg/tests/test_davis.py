import pytest
from hypothesis import given, strategies as st

from coxtwist import davis
from coxtwist.davis import (Halfspace, Wall, distance_to_wall, fixed_maximal_cell, frame_chambers,
                            gallery_distance, geometric_domains, halfspace_containing, incident,
                            is_geometric_pair, is_geometric_pair_ball, residue, residue_distance,
                            sector_of, set_distance, side_of_wall)
from coxtwist.errors import InvalidSubset, NotSeparated, WallsIntersect
from coxtwist.instances import catalog
from coxtwist.words import engine_for

from conftest import dihedral
from oracles import bfs_distance_to_set, residue_distance_bfs


@pytest.fixture
def E():
    return engine_for(catalog("Q3"))


@pytest.fixture
def D3():
    return engine_for(dihedral(3))


def test_side_of_wall(E, D3):
    assert side_of_wall(E.identity, Wall(E.generator("s")))
    assert not side_of_wall(E.generator("s"), Wall(E.generator("s")))
    assert not side_of_wall(D3.element("st"), Wall(D3.element("tst")))


def test_halfspace_containing(E):
    Ws = Wall(E.generator("s"))
    assert halfspace_containing(Ws, [E.identity]) == Halfspace(Ws, True)
    assert halfspace_containing(Ws, Wall(E.conjugate(E.generator("t"), E.generator("a")))) == Halfspace(Ws, True)
    with pytest.raises(NotSeparated):
        halfspace_containing(Ws, [E.identity, E.generator("s")])
    with pytest.raises(WallsIntersect):
        halfspace_containing(Ws, Wall(E.generator("t")))


def test_incidence(E, D3):
    Ws = Wall(E.generator("s"))
    assert incident(E.identity, Ws) and distance_to_wall(E.identity, Ws) == 0
    assert not incident(E.generator("t"), Ws) and distance_to_wall(E.generator("t"), Ws) == 1
    assert incident(D3.element("ts"), Wall(D3.generator("s")))


@pytest.mark.parametrize("name", ["Q3", "Q5", "E1"])
def test_distance_to_wall_matches_bfs(name):
    E = engine_for(catalog(name))
    ball = E.enumerate_ball(4)
    walls = {E.conjugate(x, g) for x in E.enumerate_ball(2) for g in E.generators()}
    for r in sorted(walls)[:8]:
        W = Wall(r)
        near = {c.word for c in E.enumerate_ball(9) if incident(c, W)}
        for c in ball:
            assert distance_to_wall(c, W) == bfs_distance_to_set(E, c, near, 9)


def test_distances(E):
    assert gallery_distance(E.identity, E.element("st")) == 2
    X = residue(E.identity, "as").chambers()
    Y = residue(E.element("sts"), "tb").chambers()
    assert set_distance(X, Y) == 2
    assert set_distance(X, X) == 0
    assert residue_distance(residue(E.identity, "as"), residue(E.element("sts"), "tb")) == 2


@given(st.lists(st.integers(0, 3), max_size=8), st.lists(st.integers(0, 3), max_size=8),
       st.sampled_from(["as", "st", "tb", "s", "a"]), st.sampled_from(["as", "st", "tb", "b"]))
def test_residue_distance_matches_pairwise(u, v, T1, T2):
    E = engine_for(catalog("Q3"))
    R1 = residue(E.from_word(u), T1)
    R2 = residue(E.from_word(v), T2)
    brute = min(E.distance(x, y) for x in R1.chambers() for y in R2.chambers())
    assert residue_distance(R1, R2) == brute


@given(st.lists(st.integers(0, 3), max_size=3), st.lists(st.integers(0, 3), max_size=3),
       st.sampled_from(["as", "st", "tb"]), st.sampled_from(["as", "st", "tb", "b"]))
def test_residue_distance_matches_bfs(u, v, T1, T2):
    E = engine_for(catalog("Q3"))
    R1 = residue(E.from_word(u), T1)
    R2 = residue(E.from_word(v), T2)
    assert residue_distance(R1, R2) == residue_distance_bfs(E, R1, R2, 10)


def test_fixed_maximal_cell(E):
    R = fixed_maximal_cell([E.generator("s"), E.generator("t")])
    assert R.anchor.is_identity() and R.type == frozenset("st")
    b2 = E.conjugate(E.element("sts"), E.generator("b"))
    R = fixed_maximal_cell([E.generator("s"), b2])
    assert R.type == frozenset("tb")
    assert R.contains(E.element("sts"))
    R = fixed_maximal_cell([E.generator("a"), E.generator("s")])
    assert R.anchor.is_identity() and R.type == frozenset("as")


def test_frame_chambers(E):
    L = [E.generator("s"), E.generator("t")]
    frame = frame_chambers(residue(E.identity, "st"), L)
    assert [str(c) for c in frame] == ["e", "s t s"]
    b2 = E.conjugate(E.element("sts"), E.generator("b"))
    L2 = [E.generator("s"), b2]
    R = fixed_maximal_cell(L2)
    frame = frame_chambers(R, L2)
    assert E.element("sts") in frame and len(frame) == 2
    assert all(R.contains(c) for c in frame)


def test_geometric_domains(E):
    L = [E.generator("s"), E.generator("t")]
    d1, d2 = geometric_domains(L)
    assert d1.contains(E.identity) and d2.contains(E.element("sts"))
    assert all(h.identity_side for h in d1.halfspaces)
    assert not any(h.identity_side for h in d2.halfspaces)
    group = davis.group_closure(L)
    for c in E.enumerate_ball(8):
        orbit = {E.multiply(g, c) for g in group}
        if all(len(x) <= 8 for x in orbit):
            assert sum(d1.contains(x) for x in orbit) == 1


def test_is_geometric_pair(E, twisted_Q3):
    Ws, Wt = Wall(E.generator("s")), Wall(E.generator("t"))
    assert is_geometric_pair(Halfspace(Ws, True), Halfspace(Wt, True))
    assert not is_geometric_pair(Halfspace(Ws, True), Halfspace(Wt, False))
    with pytest.raises(InvalidSubset):
        is_geometric_pair(Halfspace(Ws, True), Halfspace(Ws, False))


def window_geometric(h1, h2, radius=4, length=14):
    """Infinite dihedral oracle: count orbit points of alternating words up to ``length``."""
    E = h1.wall.engine
    p, r = h1.wall.element, h2.wall.element
    group = {E.identity}
    layer = {E.identity}
    for _ in range(length):
        layer = {E.multiply(g, x) for g in layer for x in (p, r)} - group
        group |= layer
    for c in E.enumerate_ball(radius):
        if sum(1 for g in group if h1.contains(E.multiply(g, c)) and h2.contains(E.multiply(g, c))) != 1:
            return False
    return True


@pytest.mark.parametrize("pair", [("a", "b"), ("a", "t"), ("s", "b")])
def test_strip_criterion_matches_orbit_window(E, pair):
    W1, W2 = (Wall(E.generator(x)) for x in pair)
    for s1 in (True, False):
        for s2 in (True, False):
            h1, h2 = Halfspace(W1, s1), Halfspace(W2, s2)
            assert is_geometric_pair(h1, h2) == window_geometric(h1, h2)


@pytest.mark.parametrize("name,pair", [("Q3", "st"), ("Q4", "st"), ("Q5", "st"), ("E1", "sp")])
def test_finite_pair_matches_ball_oracle(name, pair):
    E = engine_for(catalog(name))
    W1, W2 = (Wall(E.generator(x)) for x in pair)
    for s1 in (True, False):
        for s2 in (True, False):
            h1, h2 = Halfspace(W1, s1), Halfspace(W2, s2)
            assert is_geometric_pair(h1, h2) == is_geometric_pair_ball(h1, h2, 7)


def test_sector_of(E):
    L = [E.generator("s"), E.generator("t")]
    assert sector_of(L, E.identity).is_identity()
    assert str(sector_of(L, E.element("st"))) == "s t"
    d1, d2 = geometric_domains(L)
    assert sector_of(L, d2.representative) == E.longest("st")
