"""Generating sets, bases, markings, moves, marking halfspaces and Delta-domains.

A generating set ``S`` lives inside the ambient group ``W`` presented by the
reference generators ``S'``.  Bases are checked in the reference complex of
``S`` itself (a second word engine built on ``S``'s own defining graph),
while halfspaces are computed in the ambient complex of ``S'``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Mapping

from . import davis
from .davis import FundamentalDomain, Halfspace, Wall
from .errors import (InvalidSubset, NotAMarking, NotGenerating, NotGood, Unsupported,
                     VerificationFailed)
from .graph import (DefiningGraph, complement_components, is_fc, is_irreducible, is_spherical,
                    maximal_spherical_subsets, perp, spherical_subsets)
from .words import GroupElement, InfiniteAtCutoff, WordEngine, engine_for


@dataclass(eq=False)
class GeneratingSet:
    """Labelled involutions in the ambient group together with their defining graph."""

    engine: WordEngine
    labels: tuple[str, ...]
    elements: tuple[GroupElement, ...]
    graph: DefiningGraph
    _cache: dict = field(default_factory=dict, repr=False)

    @classmethod
    def reference(cls, G: DefiningGraph) -> "GeneratingSet":
        E = engine_for(G)
        return cls(E, G.generators, E.generators(), G)

    @classmethod
    def from_words(cls, engine: WordEngine, words: Mapping[str, object], cutoff: int = 100,
                   graph: DefiningGraph | None = None) -> "GeneratingSet":
        labels = tuple(words)
        elems = tuple(engine.element(w) for w in words.values())
        for lab, x in zip(labels, elems):
            if not engine.is_involution(x):
                raise NotGenerating(f"{lab} := {x} is not an involution")
        if len(set(elems)) != len(elems):
            raise NotGenerating("repeated generator")
        computed = graph_from_elements(engine, labels, elems, cutoff)
        if graph is not None and graph != computed:
            raise VerificationFailed("stated defining graph disagrees with product orders")
        return cls(engine, labels, elems, computed)

    # -- access ------------------------------------------------------------
    @property
    def ref(self) -> WordEngine:
        """Word engine of the reference complex of ``S`` (its own presentation)."""
        return engine_for(self.graph)

    def element(self, label: str) -> GroupElement:
        return self.elements[self.labels.index(label)]

    def resolve(self, letters: Iterable[str]) -> GroupElement:
        """Ambient element of a word in the labels of ``S``."""
        return self.engine.multiply(*(self.element(x) for x in letters))

    def elements_of(self, T: Iterable[str]) -> list[GroupElement]:
        return [self.element(x) for x in self.graph.ordered(T)]

    def key(self) -> tuple:
        return tuple(x.word for x in self.elements)

    def words(self) -> dict[str, tuple[str, ...]]:
        return {lab: x.letters for lab, x in zip(self.labels, self.elements)}

    def is_reference(self) -> bool:
        return self.labels == self.engine.graph.generators and all(
            x.word == (i,) for i, x in enumerate(self.elements))

    def cached(self, key, fn):
        try:
            return self._cache[key]
        except KeyError:
            value = self._cache[key] = fn()
            return value

    def __repr__(self):
        return "GeneratingSet(" + ", ".join(f"{l}={x}" for l, x in zip(self.labels, self.elements)) + ")"


def graph_from_elements(engine: WordEngine, labels, elems, cutoff: int = 100) -> DefiningGraph:
    edges = []
    for (l1, x), (l2, y) in combinations(zip(labels, elems), 2):
        m = engine.product_order(x, y, cutoff)
        if not isinstance(m, InfiniteAtCutoff):
            edges.append((l1, l2, m))
    return DefiningGraph.from_edges(labels, edges)


def check_pipeline(S: GeneratingSet) -> None:
    """Standing hypotheses: irreducible, non-spherical, FC."""
    G = S.graph
    if not is_irreducible(G, G.generators):
        raise Unsupported("reducible generating sets are not supported")
    if is_spherical(G, G.generators):
        raise Unsupported("spherical generating sets are not supported")
    if not is_fc(G):
        raise Unsupported("generating set is not of type FC")


# -- bases and markings --------------------------------------------------------

@dataclass(frozen=True)
class Base:
    """``(core, w)`` with ``w`` stored as its canonical word in the labels of ``S``."""

    core: str
    letters: tuple[str, ...] = ()

    @property
    def support(self) -> frozenset:
        return frozenset((self.core,) + self.letters)

    @property
    def simple(self) -> bool:
        return len(set(self.letters)) == len(self.letters) and self.core not in self.letters

    def __str__(self):
        return f"({self.core},{''.join(self.letters) if all(len(x) == 1 for x in self.letters) else ' '.join(self.letters)})"


@dataclass(frozen=True)
class Marking:
    base: Base
    marker: str

    @property
    def core(self) -> str:
        return self.base.core

    @property
    def support(self) -> frozenset:
        return self.base.support

    @property
    def simple(self) -> bool:
        return self.base.simple

    def __str__(self):
        return f"({self.base},{self.marker})"


def _ref_word(S: GeneratingSet, letters: Iterable[str]) -> GroupElement:
    return S.ref.element(list(letters))


def is_base(S: GeneratingSet, s: str, letters: Iterable[str]) -> bool:
    letters = tuple(letters)
    G = S.graph
    G.check((s,) + letters)
    w = _ref_word(S, letters)
    n = len(letters)
    if len(w.word) != n:
        return False
    if davis.distance_to_wall(w, Wall(S.ref.generator(s))) != n:
        return False
    return is_spherical(G, (s,) + letters)


def make_base(S: GeneratingSet, s: str, letters: Iterable[str]) -> Base:
    letters = tuple(letters)
    if not is_base(S, s, letters):
        raise InvalidSubset(f"({s}, {' '.join(letters)}) is not a base")
    return Base(s, _ref_word(S, letters).letters)


def simple_base(S: GeneratingSet, s: str, J: Iterable[str]) -> Base:
    G = S.graph
    J = G.check(J)
    if s not in J:
        raise InvalidSubset("core must lie in J")
    if not (is_irreducible(G, J) and is_spherical(G, J)):
        raise InvalidSubset(f"{sorted(J)} must be irreducible spherical")
    rest = G.ordered(J - {s})
    for order in permutations(rest):
        if all(is_irreducible(G, {s, *order[:i]}) for i in range(1, len(order) + 1)):
            base = Base(s, _ref_word(S, order).letters)
            if not is_base(S, s, base.letters):
                raise AssertionError("simple base fails the distance condition")
            return base
    raise AssertionError("no valid ordering for an irreducible support")


def is_marking(S: GeneratingSet, base: Base, m: str) -> bool:
    return not is_spherical(S.graph, base.support | {m})


def make_marking(S: GeneratingSet, base: Base, m: str) -> Marking:
    S.graph.check((m,))
    if not is_base(S, base.core, base.letters):
        raise InvalidSubset(f"{base} is not a base")
    if not is_marking(S, base, m):
        raise NotAMarking(f"support of {base} with {m} is spherical")
    return Marking(Base(base.core, _ref_word(S, base.letters).letters), m)


def marking_halfspace(S: GeneratingSet, mu: Marking) -> Halfspace:
    """Phi_s^mu: the halfspace of the wall of ``s`` containing ``w W_m``."""
    def compute():
        E = S.engine
        w = S.resolve(mu.base.letters)
        ws = Wall(S.element(mu.core))
        wm = Wall(E.conjugate(w, S.element(mu.marker)))
        return davis.halfspace_containing(ws, wm)

    return S.cached(("phi", mu), compute)


# -- the marking graph ---------------------------------------------------------

def bases_with_core(S: GeneratingSet, s: str) -> list[Base]:
    def compute():
        G = S.graph
        R = S.ref
        found = set()
        for M in maximal_spherical_subsets(G):
            if s not in M:
                continue
            for w in R.subgroup_elements(M):
                if is_base(S, s, w.letters):
                    found.add(Base(s, w.letters))
        return sorted(found, key=lambda b: (len(b.letters), [G.index(x) for x in b.letters]))

    return S.cached(("bases", s), compute)


def markings_with_core(S: GeneratingSet, s: str) -> list[Marking]:
    def compute():
        out = []
        for b in bases_with_core(S, s):
            for m in S.graph.generators:
                if is_marking(S, b, m):
                    out.append(Marking(b, m))
        return out

    return S.cached(("markings", s), compute)


def move_neighbors(S: GeneratingSet, mu: Marking) -> list[Marking]:
    """Markings one M1 or M2 move away from ``mu``."""
    G = S.graph
    out = []
    for m2 in G.generators:
        if G.adjacent(mu.marker, m2) and is_marking(S, mu.base, m2):
            out.append(Marking(mu.base, m2))
    w = _ref_word(S, mu.base.letters)
    R = S.ref
    for j in G.generators:
        if not G.adjacent(mu.marker, j):
            continue
        w2 = R.multiply(w, R.generator(j))
        if not is_base(S, mu.core, w2.letters):
            continue
        b2 = Base(mu.core, w2.letters)
        if is_marking(S, b2, mu.marker):
            out.append(Marking(b2, mu.marker))
    return out


def marking_classes(S: GeneratingSet, s: str) -> dict[Marking, int]:
    """Connected components of the marking graph with core ``s``."""
    def compute():
        nodes = markings_with_core(S, s)
        comp: dict[Marking, int] = {}
        for start in nodes:
            if start in comp:
                continue
            cid = len(set(comp.values()))
            comp[start] = cid
            queue = deque([start])
            while queue:
                mu = queue.popleft()
                for nu in move_neighbors(S, mu):
                    if nu not in comp:
                        comp[nu] = cid
                        queue.append(nu)
        return comp

    return S.cached(("classes", s), compute)


def move_equivalent(S: GeneratingSet, mu: Marking, nu: Marking) -> bool:
    if mu.core != nu.core:
        raise InvalidSubset("markings with different cores")
    classes = marking_classes(S, mu.core)
    return classes[mu] == classes[nu]


# -- simple markings and component halfspaces ------------------------------------

def irreducible_spherical_supersets(S: GeneratingSet, I: Iterable[str]) -> list[frozenset]:
    I = frozenset(I)
    return [J for J in S.cached("irr_sph", lambda: spherical_subsets(S.graph, irreducible=True))
            if I <= J]


def find_simple_marking(S: GeneratingSet, I: Iterable[str], s: str) -> Marking:
    G = S.graph
    I = G.check(I)
    if s not in I:
        raise InvalidSubset("core must lie in I")
    for J in irreducible_spherical_supersets(S, I):
        for m in G.generators:
            if not is_spherical(G, J | {m}):
                return Marking(simple_base(S, s, J), m)
    raise AssertionError("no simple marking found")


def simple_markings(S: GeneratingSet, I: Iterable[str], s: str) -> list[Marking]:
    """All simple markings with core ``s`` and support containing ``I``."""
    out = []
    for J in irreducible_spherical_supersets(S, I):
        if s not in J:
            continue
        b = simple_base(S, s, J)
        for m in S.graph.generators:
            if not is_spherical(S.graph, J | {m}):
                out.append(Marking(b, m))
    return out


def K_support(S: GeneratingSet, mu: Marking, I: Iterable[str]) -> frozenset:
    G = S.graph
    I = G.check(I)
    J = mu.support
    if J != I:
        return frozenset(J - I - perp(G, I))
    return frozenset((mu.marker,))


def component_marking(S: GeneratingSet, s: str, t: str, A: Iterable[str]) -> Marking:
    """A simple marking with core ``s``, ``t`` in its support and ``K_{s,t}`` inside ``A``."""
    G = S.graph
    A = frozenset(A)
    for k in G.ordered(A):
        if not is_spherical(G, {s, t, k}):
            return Marking(Base(s, (t,)), k)
        mu = find_simple_marking(S, {s, t, k}, s)
        if K_support(S, mu, {s, t}) <= A:
            return mu
    raise AssertionError("no marking for component")


def component_halfspace(S: GeneratingSet, s: str, t: str, A: Iterable[str]) -> Halfspace:
    """Phi_s^{t,A}."""
    return marking_halfspace(S, component_marking(S, s, t, A))


def singleton_component_marking(S: GeneratingSet, s: str, A: Iterable[str]) -> Marking:
    """Simple marking with core ``s`` and ``K_s`` inside ``A`` (the J = {s} variant)."""
    G = S.graph
    A = frozenset(A)
    for k in G.ordered(A):
        if not G.adjacent(s, k):
            return Marking(Base(s, ()), k)
        mu = find_simple_marking(S, {s, k}, s)
        if K_support(S, mu, {s}) <= A:
            return mu
    raise AssertionError("no marking for component")


# -- Delta domains -------------------------------------------------------------

def domains_for(S: GeneratingSet, L: Iterable[str]) -> tuple[FundamentalDomain, FundamentalDomain]:
    """The two geometric fundamental domains for an irreducible spherical ``L``."""
    L = S.graph.check(L)

    def compute():
        elems = S.elements_of(L)
        x = incident_chamber(elems)
        E = S.engine
        d1 = davis.domain_at(elems, x)
        K = [E.conjugate(E.inverse(x), l).letters[0] for l in elems]
        y = E.multiply(x, E.longest(K))
        d2 = davis.domain_at(elems, y)
        if any(h1.identity_side == h2.identity_side for h1, h2 in zip(d1.halfspaces, d2.halfspaces)):
            raise AssertionError("antipodal frame chambers agree on a wall")
        return tuple(sorted((d1, d2), key=lambda d: d.representative))

    return S.cached(("domains", L), compute)


def incident_chamber(L: list[GroupElement], radius: int = 40, cap: int = 200_000) -> GroupElement:
    """A chamber ``x`` with every ``x^-1 l x`` a reference generator."""
    import heapq

    E = L[0].engine

    def potential(x):
        xi = E.inverse(x)
        return sum(len(E.conjugate(xi, l).word) - 1 for l in L)

    heap = [(potential(E.identity), (), )]
    seen = {()}
    while heap:
        pot, word = heapq.heappop(heap)
        if pot == 0:
            return GroupElement(E, word)
        if len(word) >= radius or len(seen) > cap:
            continue
        x = GroupElement(E, word)
        for g in E.generators():
            y = E.multiply(x, g)
            if y.word not in seen:
                seen.add(y.word)
                heapq.heappush(heap, (potential(y), y.word))
    raise davis.RadiusExhausted("no chamber incident to all walls")


def delta(S: GeneratingSet, mu: Marking, L: Iterable[str]) -> FundamentalDomain:
    """Delta^mu: the geometric domain for ``L`` inside Phi_s^mu."""
    L = S.graph.check(L)
    if not mu.support <= L:
        raise InvalidSubset("marking support must lie in L")
    phi = marking_halfspace(S, mu)
    chosen = [d for d in domains_for(S, L) if d.side(S.element(mu.core)) == phi]
    if len(chosen) != 1:
        raise AssertionError("domain selection failed")
    return chosen[0]


def is_good_element(S: GeneratingSet, L: Iterable[str], t: str, r: str) -> bool:
    G = S.graph
    L = G.check(L)
    if r == t or G.adjacent(r, t):
        return False
    rest = L - {t} - perp(G, {t})
    if not rest:
        return False
    for comp in complement_components(G, {t}):
        if r in comp:
            return rest <= comp
    return False


def is_good_pair(S: GeneratingSet, L: Iterable[str], pair: Iterable[str], r: str) -> bool:
    G = S.graph
    L = G.check(L)
    pair = G.check(pair)
    if is_spherical(G, pair | {r}):
        return False
    rest = L - pair - perp(G, pair)
    if not rest:
        return False
    for comp in complement_components(G, pair):
        if r in comp:
            return rest <= comp
    return False


def is_good(S: GeneratingSet, L: Iterable[str], target, r: str) -> bool:
    if isinstance(target, str):
        return is_good_element(S, L, target, r)
    return is_good_pair(S, L, target, r)


def delta_pair(S: GeneratingSet, L: Iterable[str], pair: Iterable[str], r: str) -> FundamentalDomain:
    """Delta^{{s,t},r}; when both elements are good both routes are computed and compared."""
    G = S.graph
    L = G.check(L)
    s, t = G.ordered(pair)
    if not is_good_pair(S, L, {s, t}, r):
        raise NotGood(f"{{{s},{t}}} is not good with respect to {r}")
    results = []
    for a, b in ((s, t), (t, s)):
        if is_good_element(S, L, a, r):
            results.append(delta(S, Marking(Base(a, (b,)), r), L))
    if not results:
        raise VerificationFailed("good pair without a good element")
    if len(results) == 2 and results[0] != results[1]:
        raise VerificationFailed(f"Delta^(({s},{t}),{r}) and Delta^(({t},{s}),{r}) disagree")
    return results[0]


def delta_L_r(S: GeneratingSet, L: Iterable[str], r: str) -> FundamentalDomain:
    """Delta^{L,r}, common to all non-commuting ``s, t`` with ``{s,t,r}`` non-spherical."""
    G = S.graph
    L = G.check(L)
    found = None
    for s, t in permutations(G.ordered(L), 2):
        if G.commute(s, t) or is_spherical(G, {s, t, r}):
            continue
        d = delta(S, Marking(Base(s, (t,)), r), L)
        if found is None:
            found = d
        elif d != found:
            raise VerificationFailed(f"Delta^{{L,{r}}} depends on the pair")
    if found is None:
        raise InvalidSubset("no admissible pair in L")
    return found


# -- exposure, components, doubles ---------------------------------------------

def is_exposed(S: GeneratingSet | DefiningGraph, L: Iterable[str]) -> bool:
    G = S.graph if isinstance(S, GeneratingSet) else S
    L = G.check(L)
    if len(L) <= 2:
        return True
    if len(L) > 3:
        return False
    outside = set(G.generators) - L - perp(G, L)
    isolated = [l for l in L if not any(G.adjacent(l, x) for x in outside)]
    return len(isolated) >= 2


def pair_components(S: GeneratingSet, s: str, t: str) -> list[frozenset]:
    return complement_components(S.graph, {s, t})


def component_kind(S: GeneratingSet, s: str, t: str, A: Iterable[str]) -> tuple[str, str]:
    G = S.graph
    A = frozenset(A)
    big = any(not is_spherical(G, {s, t, r}) for r in A)
    exposed = any(
        is_spherical(G, {s, t, p}) and is_irreducible(G, {s, t, p}) and is_exposed(G, {s, t, p})
        for p in A
    )
    return ("Big" if big else "Small", "Exposed" if exposed else "NotExposed")


def irreducible_spherical_pairs(G: DefiningGraph) -> list[frozenset]:
    return [P for P in spherical_subsets(G, irreducible=True) if len(P) == 2]


def doubles_consistent(S: GeneratingSet, pair: Iterable[str]) -> bool:
    G = S.graph
    s, t = G.ordered(pair)
    hs = {x: {marking_halfspace(S, mu) for mu in simple_markings(S, {s, t}, x)} for x in (s, t)}
    if len(hs[s]) != 1 or len(hs[t]) != 1:
        return False
    return davis.is_geometric_pair(next(iter(hs[s])), next(iter(hs[t])))


def has_consistent_doubles(S: GeneratingSet) -> bool:
    return all(doubles_consistent(S, P) for P in irreducible_spherical_pairs(S.graph))


def components_compatible(S: GeneratingSet, s: str, t: str, A1, A2) -> bool:
    return (component_halfspace(S, s, t, A1) == component_halfspace(S, s, t, A2)
            and component_halfspace(S, t, s, A1) == component_halfspace(S, t, s, A2))


def self_compatible(S: GeneratingSet, s: str, t: str, A) -> bool:
    return davis.is_geometric_pair(component_halfspace(S, s, t, A), component_halfspace(S, t, s, A))


def cell_of(S: GeneratingSet, L: Iterable[str]) -> davis.Residue:
    """C_L as a residue of the ambient complex."""
    L = S.graph.check(L)
    return S.cached(("cell", L), lambda: davis.fixed_maximal_cell(S.elements_of(L)))


def cell_chambers(S: GeneratingSet, L: Iterable[str]) -> list[GroupElement]:
    L = S.graph.check(L)
    return S.cached(("cellch", L), lambda: cell_of(S, L).chambers())


def consistency_count(S: GeneratingSet, s: str, t: str, V: FundamentalDomain) -> int:
    E = S.engine
    shifts = [S.element(s), E.identity, S.element(t)]
    count = 0
    for L in maximal_spherical_subsets(S.graph):
        if any(V.translate_contains(g, c) for c in cell_chambers(S, L) for g in shifts):
            count += 1
    return count


def peripheral_doubles(S: GeneratingSet) -> list[frozenset]:
    G = S.graph
    bad = [P for P in irreducible_spherical_pairs(G) if not doubles_consistent(S, P)]
    if not bad:
        return []
    scores = {}
    for P in bad:
        s, t = G.ordered(P)
        scores[P] = max(consistency_count(S, s, t, V) for V in domains_for(S, P))
    best = max(scores.values())
    return [P for P in bad if scores[P] == best]
