"""Chamber geometry of the Davis complex: walls, halfspaces, residues, domains.

Chambers are group elements.  The wall of a reflection ``r`` separates
``c`` from the identity chamber exactly when ``len(r c) < len(c)``, so all
predicates are exact and need no geometric realisation.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

from .errors import (InconclusiveRadius, InvalidSubset, NotAReflection, NotSeparated,
                     RadiusExhausted, WallsIntersect)
from .graph import is_spherical
from .words import GroupElement, InfiniteAtCutoff, Reflection, WordEngine

DEFAULT_CUTOFF = 100


@dataclass(frozen=True, eq=False)
class Wall:
    """The wall fixed by a reflection."""

    element: GroupElement

    def __post_init__(self):
        if not self.element.engine.is_reflection(self.element):
            raise NotAReflection(f"{self.element} is not a reflection")

    @cached_property
    def reflection(self) -> Reflection:
        return self.element.engine.reflection_form(self.element)

    @property
    def engine(self) -> WordEngine:
        return self.element.engine

    def __eq__(self, other):
        return isinstance(other, Wall) and self.element == other.element

    def __hash__(self):
        return hash(("wall", self.element.word))

    def __repr__(self):
        return f"Wall({self.element})"


def wall(g: GroupElement) -> Wall:
    return Wall(g)


@dataclass(frozen=True)
class Halfspace:
    wall: Wall
    identity_side: bool

    def contains(self, c: GroupElement) -> bool:
        return side_of_wall(c, self.wall) == self.identity_side

    def opposite(self) -> "Halfspace":
        return Halfspace(self.wall, not self.identity_side)

    def __repr__(self):
        side = "identity side" if self.identity_side else "other side"
        return f"Halfspace({self.wall.element}, {side})"


def side_of_wall(c: GroupElement, w: Wall) -> bool:
    """True iff ``c`` lies on the identity side of ``w``."""
    E = c.engine
    return E.length(E.multiply(w.element, c)) > len(c.word)


def walls_disjoint(w1: Wall, w2: Wall, cutoff: int = DEFAULT_CUTOFF) -> bool:
    if w1 == w2:
        return False
    E = w1.engine
    return isinstance(E.product_order(w1.element, w2.element, cutoff), InfiniteAtCutoff)


def halfspace_containing(w: Wall, K, cutoff: int = DEFAULT_CUTOFF) -> Halfspace:
    """The halfspace of ``w`` containing the chamber set or wall ``K``."""
    if isinstance(K, Wall):
        if not walls_disjoint(w, K, cutoff):
            raise WallsIntersect(f"{w} and {K} intersect")
        refl = K.reflection
        u = refl.u
        E = u.engine
        side = side_of_wall(u, w)
        other = side_of_wall(E.multiply(u, E.generator(refl.generator)), w)
        if side != other:
            raise AssertionError("incident chambers of a disjoint wall on different sides")
        return Halfspace(w, side)
    chambers = list(K)
    if not chambers:
        raise InvalidSubset("empty chamber set")
    sides = {side_of_wall(c, w) for c in chambers}
    if len(sides) != 1:
        raise NotSeparated(f"chamber set meets both sides of {w}")
    return Halfspace(w, sides.pop())


def incident(c: GroupElement, w: Wall) -> bool:
    E = c.engine
    return len(E.conjugate(E.inverse(c), w.element).word) == 1


def distance_to_wall(c: GroupElement, w: Wall) -> int:
    """Gallery distance from ``c`` to the nearest chamber incident to ``w``.

    Equals ``(len(c^-1 r c) - 1) / 2``: descending along left descents of
    the reflection ``c^-1 r c`` shortens it by two per step.
    """
    E = c.engine
    return (len(E.conjugate(E.inverse(c), w.element).word) - 1) // 2


def gallery_distance(c1: GroupElement, c2: GroupElement) -> int:
    return c1.engine.distance(c1, c2)


def set_distance(X: Iterable[GroupElement], Y: Iterable[GroupElement]) -> int:
    X = list(X)
    Y = list(Y)
    if not X or not Y:
        raise InvalidSubset("empty chamber set")
    E = X[0].engine
    return min(E.distance(x, y) for x in X for y in Y)


# -- residues ----------------------------------------------------------------

@dataclass(frozen=True)
class Residue:
    """The chamber set ``anchor <type>``; ``anchor`` is its shortest element."""

    anchor: GroupElement
    type: frozenset

    @property
    def engine(self) -> WordEngine:
        return self.anchor.engine

    def chambers(self) -> list[GroupElement]:
        E = self.engine
        return [E.multiply(self.anchor, v) for v in E.subgroup_elements(self.type)]

    def contains(self, c: GroupElement) -> bool:
        return self.engine.min_left_coset_rep(c, self.type) == self.anchor

    def __repr__(self):
        return f"Residue({self.anchor}, {{{', '.join(self.engine.graph.ordered(self.type))}}})"


def residue(c: GroupElement, T: Iterable[str]) -> Residue:
    T = frozenset(T)
    return Residue(c.engine.min_left_coset_rep(c, T), T)


def residue_distance(R1: Residue, R2: Residue) -> int:
    """Minimal gallery distance between two residues (double coset length)."""
    E = R1.engine
    x = E.multiply(E.inverse(R1.anchor), R2.anchor)
    return len(E.min_double_coset_rep(R1.type, x, R2.type).word)


def _conjugates(E: WordEngine, x: GroupElement, L: Sequence[GroupElement]):
    xi = E.inverse(x)
    return [E.conjugate(xi, l) for l in L]


def fixed_maximal_cell(L: Sequence[GroupElement], radius: int = 40, cap: int = 200_000) -> Residue:
    """The maximal spherical residue stabilised by the finite group ``<L>``.

    Best-first search over chambers ``x`` ordered by ``sum len(x^-1 l x)``;
    the first ``x`` for which the conjugates lie in a common spherical
    parabolic ``<T>`` gives the residue ``x <T>``, with ``T`` then enlarged
    greedily to a maximal spherical set.
    """
    L = list(L)
    if not L:
        raise InvalidSubset("empty element set")
    E = L[0].engine
    G = E.graph
    gens = E.generators()

    def potential(x):
        return sum(len(y.word) for y in _conjugates(E, x, L))

    start = E.identity
    heap = [(potential(start), 0, start.word)]
    seen = {start.word}
    while heap:
        pot, ln, word = heapq.heappop(heap)
        x = GroupElement(E, word)
        T = set()
        for y in _conjugates(E, x, L):
            T |= E.support(y)
        if is_spherical(G, T):
            for g in G.generators:
                if g not in T and is_spherical(G, T | {g}):
                    T.add(g)
            return residue(x, T)
        if ln >= radius or len(seen) > cap:
            continue
        for g in gens:
            y = E.multiply(x, g)
            if y.word not in seen:
                seen.add(y.word)
                heapq.heappush(heap, (potential(y), len(y.word), y.word))
    raise RadiusExhausted(f"no fixed spherical residue within radius {radius}")


def frame_chambers(R: Residue, L: Sequence[GroupElement]) -> list[GroupElement]:
    """Chambers of ``R`` incident to the wall of every element of ``L`` (D_L)."""
    walls = [Wall(l) for l in L]
    return sorted(c for c in R.chambers() if all(incident(c, w) for w in walls))


# -- fundamental domains -----------------------------------------------------

@dataclass(frozen=True)
class FundamentalDomain:
    """Intersection of one halfspace per element of ``L``."""

    halfspaces: tuple[Halfspace, ...]
    representative: GroupElement

    def contains(self, c: GroupElement) -> bool:
        return all(h.contains(c) for h in self.halfspaces)

    def side(self, l: GroupElement) -> Halfspace:
        for h in self.halfspaces:
            if h.wall.element == l:
                return h
        raise KeyError(f"{l} is not a wall of this domain")

    def translate_contains(self, g: GroupElement, c: GroupElement) -> bool:
        """Membership of ``c`` in ``g . domain``."""
        E = c.engine
        return self.contains(E.multiply(E.inverse(g), c))

    @property
    def key(self):
        return tuple((h.wall.element.word, h.identity_side) for h in self.halfspaces)

    def __eq__(self, other):
        return isinstance(other, FundamentalDomain) and self.key == other.key

    def __hash__(self):
        return hash(self.key)


def domain_at(L: Sequence[GroupElement], c: GroupElement) -> FundamentalDomain:
    """The halfspace intersection over the walls of ``L`` containing ``c``."""
    hs = tuple(Halfspace(Wall(l), side_of_wall(c, Wall(l))) for l in L)
    return FundamentalDomain(hs, c)


def geometric_domains(L: Sequence[GroupElement], R: Residue | None = None):
    """The two geometric fundamental domains of an irreducible spherical ``L``."""
    L = list(L)
    if R is None:
        R = fixed_maximal_cell(L)
    frame = frame_chambers(R, L)
    if len(frame) != 2:
        raise AssertionError(f"expected 2 frame chambers, found {len(frame)}")
    return tuple(domain_at(L, y) for y in frame)


def group_closure(L: Sequence[GroupElement], cap: int = 100_000) -> list[GroupElement]:
    """Elements of the finite subgroup generated by ``L``, ShortLex ordered."""
    E = L[0].engine
    seen = {E.identity}
    frontier = [E.identity]
    while frontier:
        nxt = []
        for g in frontier:
            for l in L:
                h = E.multiply(g, l)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        if len(seen) > cap:
            raise RadiusExhausted("subgroup closure exceeds cap")
        frontier = nxt
    return sorted(seen)


def subgroup_reflections(L: Sequence[GroupElement]) -> list[GroupElement]:
    E = L[0].engine
    group = group_closure(L)
    refl = {E.conjugate(g, l) for g in group for l in L}
    return sorted(refl)


def is_fundamental_domain_finite(hs: Sequence[Halfspace], R: Residue) -> bool:
    """Orbit test over the chambers of a residue stabilised by the group.

    Walls of the group all cross ``R``, and a chamber lies on the same side
    of each of them as its projection onto ``R``; checking orbits inside
    ``R`` is therefore exact.
    """
    L = [h.wall.element for h in hs]
    group = group_closure(L)
    E = R.engine
    chambers = R.chambers()
    done = set()
    for c in chambers:
        if c in done:
            continue
        orbit = {E.multiply(g, c) for g in group}
        done |= orbit
        if sum(1 for x in orbit if all(h.contains(x) for h in hs)) != 1:
            return False
    return True


def is_geometric_pair(h1: Halfspace, h2: Halfspace, cutoff: int = DEFAULT_CUTOFF) -> bool:
    """Is ``h1 n h2`` a fundamental domain for the group of the two reflections?

    Finite group: exact orbit test on the fixed residue.  Infinite group
    (disjoint walls): the intersection is a fundamental domain iff it is the
    strip between the two walls.
    """
    if h1.wall == h2.wall:
        raise InvalidSubset("halfspaces of the same wall")
    p = h1.wall.element
    r = h2.wall.element
    if walls_disjoint(h1.wall, h2.wall, cutoff):
        return (h1 == halfspace_containing(h1.wall, h2.wall, cutoff)
                and h2 == halfspace_containing(h2.wall, h1.wall, cutoff))
    R = fixed_maximal_cell([p, r])
    return is_fundamental_domain_finite((h1, h2), R)


def is_geometric_pair_ball(h1: Halfspace, h2: Halfspace, radius: int, cap: int = 200_000) -> bool:
    """Orbit test on complete orbits inside a ball; used as an oracle."""
    E = h1.wall.engine
    ball = E.enumerate_ball(radius, cap)
    group = group_closure([h1.wall.element, h2.wall.element], cap=10_000)
    complete = 0
    for c in ball:
        orbit = {E.multiply(g, c) for g in group}
        if any(len(x.word) > radius for x in orbit):
            continue
        complete += 1
        if sum(1 for x in orbit if h1.contains(x) and h2.contains(x)) != 1:
            return False
    if not complete:
        raise InconclusiveRadius(f"no complete orbit within radius {radius}")
    return True


def sector_of(L: Sequence[GroupElement], c: GroupElement, R: Residue | None = None) -> GroupElement:
    """The ``g`` in ``<L>`` such that ``c`` lies in ``g`` times the first geometric sector."""
    L = list(L)
    dom1, _ = geometric_domains(L, R)
    x1 = dom1.representative
    E = c.engine
    walls = [Wall(r) for r in subgroup_reflections(L)]
    target = tuple(side_of_wall(c, w) for w in walls)
    for g in group_closure(L):
        y = E.multiply(g, x1)
        if tuple(side_of_wall(y, w) for w in walls) == target:
            return g
    raise AssertionError("chamber in no sector")


def sign_tuples_geometric(L: Sequence[GroupElement], R: Residue) -> list[tuple[bool, ...]]:
    """All side tuples over the walls of ``L`` that give a fundamental domain."""
    walls = [Wall(l) for l in L]
    out = []
    for sides in product((True, False), repeat=len(walls)):
        hs = tuple(Halfspace(w, s) for w, s in zip(walls, sides))
        if is_fundamental_domain_finite(hs, R):
            out.append(sides)
    return out
