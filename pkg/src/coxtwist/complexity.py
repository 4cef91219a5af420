"""E-sets, the complexity K(S), partition twists, minimisation and conjugator search."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable

from . import davis
from .davis import Wall
from .errors import (InconclusiveRadius, InvalidSubset, NotFound, NotSeparated, Unsupported,
                     VerificationFailed)
from .graph import complement_components, diagram_components, is_spherical, maximal_spherical_subsets
from .marking import (GeneratingSet, cell_chambers, cell_of, component_halfspace, delta_pair,
                      domains_for, is_exposed, is_good_pair, marking_halfspace, simple_base,
                      singleton_component_marking)
from .twist import ElementaryTwist, apply_twist_generators, enumerate_twists, is_k_rigid
from .words import GroupElement


@dataclass(frozen=True, order=True)
class ComplexityValue:
    """``(K1, K2)``, ordered lexicographically."""

    k1: int
    k2: int

    def __str__(self):
        return f"({self.k1}, {self.k2})"


def complexity_less(x, y) -> bool:
    """Lexicographic comparison of ``ComplexityValue`` or plain pairs."""
    def pair(v):
        return (v.k1, v.k2) if isinstance(v, ComplexityValue) else tuple(v)
    return pair(x) < pair(y)


# -- E-sets -------------------------------------------------------------------

def D_set(S: GeneratingSet, L: Iterable[str]) -> list[GroupElement]:
    """Chambers of C_L incident to every wall of L."""
    L = S.graph.check(L)
    return S.cached(("D", L), lambda: davis.frame_chambers(cell_of(S, L), S.elements_of(L)))


def _delta_good_route(S: GeneratingSet, Li: frozenset, I: frozenset):
    G = S.graph
    for r in G.ordered(I):
        if is_spherical(G, Li | {r}):
            continue
        for s, t in combinations(G.ordered(Li), 2):
            if G.commute(s, t):
                continue
            if is_good_pair(S, Li, {s, t}, r):
                return delta_pair(S, Li, {s, t}, r)
    if not is_k_rigid(G, 3):
        raise Unsupported("E-sets of non-exposed sets need a 3-rigid generating set")
    raise VerificationFailed(f"no good pair in {sorted(Li)} towards {sorted(I)}")


def _delta_alternate_route(S: GeneratingSet, Li: frozenset, I: frozenset):
    """Domain for ``L_i`` inside Phi(W_s', w C_I), ``s'`` a non-leaf of ``L_i``."""
    G = S.graph
    E = S.engine
    found = None
    for sp in G.ordered(Li):
        degree = sum(1 for x in Li if x != sp and not G.commute(sp, x))
        if degree < 2:
            continue
        base = simple_base(S, sp, Li)
        w = S.resolve(base.letters)
        target = [E.multiply(w, c) for c in cell_chambers(S, I)]
        phi = davis.halfspace_containing(Wall(S.element(sp)), target)
        chosen = [d for d in domains_for(S, Li) if d.side(S.element(sp)) == phi]
        if len(chosen) != 1:
            raise VerificationFailed("alternate domain selection failed")
        if found is not None and chosen[0] != found:
            raise VerificationFailed("alternate route depends on the non-leaf")
        found = chosen[0]
    return found


def E_set(S: GeneratingSet, L: Iterable[str], I: Iterable[str], cross_check: bool = True):
    """E_{L,I} as a sorted chamber list."""
    G = S.graph
    L = G.check(L)
    I = G.check(I)

    def compute():
        D = D_set(S, L)
        result = set(D)
        for Li in diagram_components(G, L):
            if is_exposed(G, Li) or Li <= I:
                continue
            dom = _delta_good_route(S, Li, I)
            if cross_check:
                alt = _delta_alternate_route(S, Li, I)
                if alt is not None and alt != dom:
                    raise VerificationFailed(f"E-set routes disagree for {sorted(Li)} towards {sorted(I)}")
            Ei = [c for c in cell_chambers(S, L) if dom.contains(c)]
            if not set(Ei) <= set(D):
                raise VerificationFailed("C_L meet Delta is not inside D_L")
            result &= set(Ei)
        if not result:
            raise VerificationFailed(f"E-set of {sorted(L)} towards {sorted(I)} is empty")
        return sorted(result)

    return S.cached(("E", L, I, cross_check), compute)


def E_sets(S: GeneratingSet, cross_check: bool = True) -> dict[tuple[frozenset, frozenset], list]:
    Ms = maximal_spherical_subsets(S.graph)
    return {(L, I): E_set(S, L, I, cross_check) for L, I in permutations(Ms, 2)}


def complexity(S: GeneratingSet, cross_check: bool = True) -> ComplexityValue:
    """K(S) relative to the reference set, summed over ordered pairs L != I."""
    def compute():
        Ms = maximal_spherical_subsets(S.graph)
        k1 = k2 = 0
        for L, I in permutations(Ms, 2):
            k1 += davis.residue_distance(cell_of(S, L), cell_of(S, I))
            k2 += davis.set_distance(E_set(S, L, I, cross_check), E_set(S, I, L, cross_check))
        return ComplexityValue(k1, k2)

    return S.cached(("K", cross_check), compute)


# -- partition twists -----------------------------------------------------------

def partition_twist(S: GeneratingSet, J: Iterable[str], B: Iterable[str] | None = None) -> ElementaryTwist:
    """Twist grouping the components of ``S \\ (J u J^perp)`` by their halfspaces.

    For a pair ``J = {s, t}`` components are grouped by (Phi_s^{t,A}, Phi_t^{s,A});
    the group holding the first component stays, the rest is conjugated.
    For ``J = {s}`` the minority halfspace side is conjugated.  An explicit
    ``B`` is validated against the grouping instead.
    """
    G = S.graph
    J = G.check(J)
    comps = complement_components(G, J)
    if len(J) == 2:
        s, t = G.ordered(J)
        keyf = lambda A: (component_halfspace(S, s, t, A), component_halfspace(S, t, s, A))
    elif len(J) == 1:
        (s,) = J
        keyf = lambda A: marking_halfspace(S, singleton_component_marking(S, s, A))
    else:
        raise InvalidSubset("partition twists use |J| <= 2")
    keys = [keyf(A) for A in comps]
    groups = {}
    for A, k in zip(comps, keys):
        groups.setdefault(k, []).append(A)
    if len(groups) < 2:
        raise NotSeparated(f"all components of {sorted(J)} share their halfspaces")
    rest = frozenset().union(*comps)
    if B is not None:
        B = G.check(B)
        for A, k in zip(comps, keys):
            for A2, k2 in zip(comps, keys):
                if k == k2 and bool(A & B) != bool(A2 & B):
                    raise InvalidSubset("assignment splits a halfspace group")
        if not B or not B < rest or any(A & B and not A <= B for A in comps):
            raise InvalidSubset("B must be a nonempty proper union of components")
    elif len(J) == 2:
        B = rest - frozenset().union(*groups[keys[0]])
    else:
        ordered = sorted(groups.values(), key=lambda g: (sum(len(A) for A in g), -comps.index(g[0])))
        B = frozenset().union(*ordered[0])
    return ElementaryTwist(J, rest - B, B)


# -- minimisation and conjugators -----------------------------------------------

@dataclass
class MinimizeResult:
    generating_set: GeneratingSet
    value: ComplexityValue
    sequence: list = field(default_factory=list)
    complete: bool = True
    explored: int = 0
    skipped_large: int = 0


def minimize_complexity(S: GeneratingSet, depth: int = 8, beam: int | None = None,
                        cap: int = 100_000) -> MinimizeResult:
    """Level-wise search over twist sequences with ``|J| <= 2``.

    Each level keeps the ``beam`` lowest-complexity sets (all when ``beam`` is
    None); ties are broken by the canonical twist encoding.  Stops early on
    (0, 0).  ``complete`` is False when the node cap or the beam cut the search
    before the depth was exhausted without reaching (0, 0).
    """
    start_value = complexity(S)
    best = MinimizeResult(S, start_value, [], True, 1)
    if start_value == ComplexityValue(0, 0):
        return best
    seen = {S.key()}
    layer = [(start_value, (), S, [])]
    pruned = False
    for _ in range(depth):
        nxt = []
        for _, _, T, seq in layer:
            twists = enumerate_twists(T.graph)
            best.skipped_large += sum(1 for tau in twists if len(tau.J) > 2)
            for tau in twists:
                if len(tau.J) > 2:
                    continue
                U = apply_twist_generators(T, tau)
                if U.key() in seen:
                    continue
                seen.add(U.key())
                best.explored += 1
                val = complexity(U)
                enc = tuple(t.encode(g) for t, g in seq) + (tau.encode(T.graph),)
                nseq = seq + [(tau, T.graph)]
                if val < best.value:
                    best.generating_set, best.value, best.sequence = U, val, nseq
                if val == ComplexityValue(0, 0):
                    return best
                nxt.append((val, enc, U, nseq))
                if len(seen) >= cap:
                    best.complete = False
                    return best
        nxt.sort(key=lambda e: (e[0], e[1]))
        if beam is not None and len(nxt) > beam:
            nxt = nxt[:beam]
            pruned = True
        layer = nxt
        if not layer:
            break
    if pruned:
        best.complete = False
    return best


def find_conjugator(S: GeneratingSet, radius: int = 10, cap: int = 1_000_000) -> GroupElement:
    """Shortest ``w`` (ShortLex first) with ``w S w^-1`` equal to the reference generators."""
    E = S.engine
    targets = set(E.generators())
    first = S.elements[0]
    for w in S.engine.enumerate_ball(radius, cap):
        if E.conjugate(w, first) not in targets:
            continue
        if {E.conjugate(w, x) for x in S.elements} == targets:
            return w
    raise NotFound(f"no conjugator within radius {radius}")


def angle_compatible_check(S: GeneratingSet, radius: int = 10, cap: int = 1_000_000) -> bool:
    """Every spherical pair of ``S`` is conjugate into a pair of reference generators.

    False is certain only when the product order matches no reference label;
    otherwise a failed ball search raises InconclusiveRadius.
    """
    E = S.engine
    G = S.graph
    ref_labels = {m for _, _, m in E.graph.edges()}
    targets = set(E.generators())
    ball = None
    for x, y in combinations(G.generators, 2):
        if not is_spherical(G, {x, y}):
            continue
        if G.label(x, y) not in ref_labels:
            return False
        if ball is None:
            ball = S.engine.enumerate_ball(radius, cap)
        ex, ey = S.element(x), S.element(y)
        if not any(E.conjugate(w, ex) in targets and E.conjugate(w, ey) in targets for w in ball):
            raise InconclusiveRadius(f"no conjugator for {{{x},{y}}} within radius {radius}")
    return True
