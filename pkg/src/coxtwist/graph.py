"""Defining graphs of Coxeter systems and their finite-type combinatorics."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping

import networkx as nx

from .errors import InvalidGraph, InvalidSubset, NotFC, NotSpherical

INF = math.inf

Subset = frozenset  # a GeneratorSubset is a frozenset of generator names


@dataclass(frozen=True)
class DefiningGraph:
    """Generators in a fixed order plus the finite Coxeter labels.

    A pair missing from ``labels`` has label infinity.  Keys of ``labels``
    are 2-element frozensets.
    """

    generators: tuple[str, ...]
    labels: Mapping[frozenset, int] = field(default_factory=dict)

    def __post_init__(self):
        gens = tuple(self.generators)
        if len(set(gens)) != len(gens):
            raise InvalidGraph("duplicate generator")
        if not gens:
            raise InvalidGraph("no generators")
        clean = {}
        for key, m in dict(self.labels).items():
            pair = frozenset(key)
            if len(pair) != 2 or not pair <= set(gens):
                raise InvalidGraph(f"bad edge {sorted(key)}")
            if m == INF:
                continue
            if int(m) != m or m < 2:
                raise InvalidGraph(f"label {m} on {sorted(pair)} must be an integer >= 2")
            if pair in clean and clean[pair] != m:
                raise InvalidGraph(f"conflicting labels on {sorted(pair)}")
            clean[pair] = int(m)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "labels", dict(sorted(clean.items(), key=lambda kv: self._pair_key(kv[0], gens))))

    @staticmethod
    def _pair_key(pair, gens):
        return sorted(gens.index(g) for g in pair)

    @classmethod
    def from_edges(cls, generators: Iterable[str], edges: Iterable[tuple[str, str, int]]) -> "DefiningGraph":
        labels = {}
        for u, v, m in edges:
            if u == v:
                raise InvalidGraph(f"loop at {u}")
            key = frozenset((u, v))
            if key in labels and labels[key] != m:
                raise InvalidGraph(f"conflicting labels on {u}-{v}")
            labels[key] = m
        return cls(tuple(generators), labels)

    # equality and hashing ignore dict ordering
    def _key(self):
        return (self.generators, tuple(sorted((tuple(sorted(k)), m) for k, m in self.labels.items())))

    def __eq__(self, other):
        return isinstance(other, DefiningGraph) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        edges = ", ".join(f"{u}-{v}:{m}" for u, v, m in self.edges())
        return f"DefiningGraph({' '.join(self.generators)}; {edges})"

    @cached_property
    def _index(self):
        return {g: i for i, g in enumerate(self.generators)}

    def index(self, g: str) -> int:
        try:
            return self._index[g]
        except KeyError:
            raise InvalidSubset(f"unknown generator {g!r}") from None

    def label(self, x: str, y: str):
        """Coxeter label m(x, y); 1 on the diagonal, ``INF`` when absent."""
        self.index(x)
        self.index(y)
        if x == y:
            return 1
        return self.labels.get(frozenset((x, y)), INF)

    def adjacent(self, x: str, y: str) -> bool:
        """Adjacent in the defining graph, i.e. the label is finite."""
        return x != y and self.label(x, y) != INF

    def commute(self, x: str, y: str) -> bool:
        return x != y and self.label(x, y) == 2

    def edges(self):
        """Finite-label edges as ``(u, v, m)`` in generator order."""
        out = []
        for i, u in enumerate(self.generators):
            for v in self.generators[i + 1:]:
                m = self.labels.get(frozenset((u, v)))
                if m is not None:
                    out.append((u, v, m))
        return out

    def label_matrix(self, zero_for_inf: bool = True):
        n = len(self.generators)
        mat = [[1] * n for _ in range(n)]
        for i, u in enumerate(self.generators):
            for j, v in enumerate(self.generators):
                if i != j:
                    m = self.labels.get(frozenset((u, v)), INF)
                    mat[i][j] = 0 if (m == INF and zero_for_inf) else m
        return mat

    def check(self, T: Iterable[str]) -> frozenset:
        T = frozenset(T)
        for g in T:
            self.index(g)
        return T

    def ordered(self, T: Iterable[str]) -> tuple[str, ...]:
        """Members of ``T`` in generator order."""
        T = self.check(T)
        return tuple(g for g in self.generators if g in T)

    def subset_key(self, T: Iterable[str]):
        return tuple(self.index(g) for g in self.ordered(T))

    def induced(self, T: Iterable[str]) -> "DefiningGraph":
        gens = self.ordered(T)
        keep = set(gens)
        return DefiningGraph(gens, {k: m for k, m in self.labels.items() if k <= keep})

    def relabel(self, mapping: Mapping[str, str]) -> "DefiningGraph":
        gens = tuple(mapping.get(g, g) for g in self.generators)
        labels = {frozenset(mapping.get(g, g) for g in k): m for k, m in self.labels.items()}
        return DefiningGraph(gens, labels)


def _diagram(G: DefiningGraph, T: frozenset) -> nx.Graph:
    """Coxeter-Dynkin diagram on ``T``: edges for labels >= 3, infinity included."""
    D = nx.Graph()
    D.add_nodes_from(T)
    for u, v in combinations(G.ordered(T), 2):
        if G.label(u, v) != 2:
            D.add_edge(u, v)
    return D


def _adjacency_graph(G: DefiningGraph, T: frozenset) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(T)
    for u, v in combinations(G.ordered(T), 2):
        if G.adjacent(u, v):
            H.add_edge(u, v)
    return H


def sort_subsets(G: DefiningGraph, subsets: Iterable[Iterable[str]]) -> list[frozenset]:
    return sorted((frozenset(x) for x in subsets), key=G.subset_key)


def components_of(G: DefiningGraph, T: Iterable[str]) -> list[frozenset]:
    """Connected components of the defining graph induced on ``T``."""
    T = G.check(T)
    comps = [frozenset(c) for c in nx.connected_components(_adjacency_graph(G, T))]
    return sorted(comps, key=lambda c: min(G.index(g) for g in c))


def diagram_components(G: DefiningGraph, T: Iterable[str]) -> list[frozenset]:
    """Connected components of the Coxeter-Dynkin diagram on ``T``."""
    T = G.check(T)
    comps = [frozenset(c) for c in nx.connected_components(_diagram(G, T))]
    return sorted(comps, key=lambda c: min(G.index(g) for g in c))


def perp(G: DefiningGraph, J: Iterable[str]) -> frozenset:
    """Generators outside ``J`` commuting with every member of ``J``."""
    J = G.check(J)
    if not J:
        raise InvalidSubset("perp of the empty set")
    return frozenset(g for g in G.generators if g not in J and all(G.label(g, j) == 2 for j in J))


def complement_components(G: DefiningGraph, J: Iterable[str]) -> list[frozenset]:
    """Components of ``S \\ (J u J^perp)``."""
    J = G.check(J)
    rest = set(G.generators) - J - perp(G, J)
    return components_of(G, rest)


def is_irreducible(G: DefiningGraph, J: Iterable[str]) -> bool:
    J = G.check(J)
    if not J:
        raise InvalidSubset("irreducibility of the empty set")
    return nx.is_connected(_diagram(G, J))


# -- finite type classification ----------------------------------------------

_ORDERS_EXCEPTIONAL = {"E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152, "H3": 120, "H4": 14400}
_REFLECTIONS_EXCEPTIONAL = {"E6": 36, "E7": 63, "E8": 120, "F4": 24, "H3": 15, "H4": 60}


@dataclass(frozen=True)
class FiniteFactor:
    family: str  # one of A, B, D, E6, E7, E8, F4, H3, H4, I2
    rank: int
    members: frozenset
    m: int | None = None  # dihedral label for I2

    @property
    def name(self) -> str:
        if self.family == "I2":
            return f"I2({self.m})"
        if self.family in ("A", "B", "D"):
            return f"{self.family}{self.rank}"
        return self.family

    @property
    def order(self) -> int:
        n = self.rank
        if self.family == "A":
            return math.factorial(n + 1)
        if self.family == "B":
            return 2 ** n * math.factorial(n)
        if self.family == "D":
            return 2 ** (n - 1) * math.factorial(n)
        if self.family == "I2":
            return 2 * self.m
        return _ORDERS_EXCEPTIONAL[self.family]

    @property
    def reflection_count(self) -> int:
        n = self.rank
        if self.family == "A":
            return n * (n + 1) // 2
        if self.family == "B":
            return n * n
        if self.family == "D":
            return n * (n - 1)
        if self.family == "I2":
            return self.m
        return _REFLECTIONS_EXCEPTIONAL[self.family]


@dataclass(frozen=True)
class SphericalType:
    """Per-factor verdict: finite factors plus the diagram components that are infinite."""

    factors: tuple[FiniteFactor, ...]
    infinite: tuple[frozenset, ...] = ()

    @property
    def is_finite(self) -> bool:
        return not self.infinite

    @property
    def order(self) -> int | None:
        if self.infinite:
            return None
        return math.prod(f.order for f in self.factors)

    @property
    def reflection_count(self) -> int | None:
        if self.infinite:
            return None
        return sum(f.reflection_count for f in self.factors)

    def __str__(self):
        if self.infinite:
            return "Infinite"
        if not self.factors:
            return "Finite(trivial)"
        return " x ".join(f"Finite({f.family},{f.rank})" if f.family != "I2" else f"Finite(I2({f.m}),2)"
                          for f in self.factors)


def _classify_component(G: DefiningGraph, C: frozenset) -> FiniteFactor | None:
    nodes = G.ordered(C)
    n = len(nodes)
    if n == 1:
        return FiniteFactor("A", 1, C)
    edges = {}
    for u, v in combinations(nodes, 2):
        m = G.label(u, v)
        if m == INF:
            return None
        if m >= 3:
            edges[frozenset((u, v))] = m
    if n == 2:
        m = next(iter(edges.values()))
        if m == 3:
            return FiniteFactor("A", 2, C)
        if m == 4:
            return FiniteFactor("B", 2, C)
        return FiniteFactor("I2", 2, C, m)
    if len(edges) != n - 1:
        return None  # a cycle in the diagram
    deg = {g: 0 for g in nodes}
    for e in edges:
        for g in e:
            deg[g] += 1
    if max(deg.values()) > 3:
        return None
    branch = [g for g in nodes if deg[g] == 3]
    if len(branch) > 1:
        return None
    if branch:
        if any(m != 3 for m in edges.values()):
            return None
        center = branch[0]
        arms = []
        D = nx.Graph(list(tuple(e) for e in edges))
        D.remove_node(center)
        for comp in nx.connected_components(D):
            arms.append(len(comp))
        arms.sort()
        if arms[0] == 1 and arms[1] == 1:
            return FiniteFactor("D", n, C)
        if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
            return FiniteFactor(f"E{n}", n, C)
        return None
    # a path: read off labels end to end
    ends = [g for g in nodes if deg[g] == 1]
    path = [ends[0]]
    prev = None
    while len(path) < n:
        cur = path[-1]
        nxt = [g for g in nodes if g != prev and frozenset((cur, g)) in edges]
        nxt = [g for g in nxt if g not in path]
        prev = cur
        path.append(nxt[0])
    seq = [edges[frozenset((path[i], path[i + 1]))] for i in range(n - 1)]
    if seq[0] != 3 and seq[-1] == 3:
        seq.reverse()
    if all(m == 3 for m in seq):
        return FiniteFactor("A", n, C)
    if all(m == 3 for m in seq[:-1]) and seq[-1] == 4:
        return FiniteFactor("B", n, C)
    if n == 4 and seq == [3, 4, 3]:
        return FiniteFactor("F4", 4, C)
    if all(m == 3 for m in seq[:-1]) and seq[-1] == 5 and n in (3, 4):
        return FiniteFactor(f"H{n}", n, C)
    return None


def classify(G: DefiningGraph, J: Iterable[str]) -> SphericalType:
    J = G.check(J)
    factors = []
    infinite = []
    for C in diagram_components(G, J):
        f = _classify_component(G, C)
        if f is None:
            infinite.append(C)
        else:
            factors.append(f)
    return SphericalType(tuple(factors), tuple(infinite))


def is_spherical(G: DefiningGraph, J: Iterable[str]) -> bool:
    return classify(G, J).is_finite


def maximal_cliques(G: DefiningGraph) -> list[frozenset]:
    H = _adjacency_graph(G, frozenset(G.generators))
    return sort_subsets(G, nx.find_cliques(H))


def is_fc(G: DefiningGraph) -> bool:
    """Every clique of the defining graph is spherical."""
    return all(is_spherical(G, c) for c in maximal_cliques(G))


def maximal_spherical_subsets(G: DefiningGraph) -> list[frozenset]:
    """Inclusion-maximal spherical subsets; for FC graphs these are the maximal cliques."""
    if not is_fc(G):
        raise NotFC("maximal spherical subsets need an FC defining graph")
    return maximal_cliques(G)


def spherical_subsets(G: DefiningGraph, irreducible: bool = False) -> list[frozenset]:
    """All nonempty spherical subsets (optionally only irreducible ones), ordered by size then label."""
    out = []
    gens = G.generators
    for k in range(1, len(gens) + 1):
        level = []
        for T in combinations(gens, k):
            T = frozenset(T)
            if irreducible and not is_irreducible(G, T):
                continue
            if is_spherical(G, T):
                level.append(T)
        out.extend(sort_subsets(G, level))
    return out


def longest_element(G: DefiningGraph, J: Iterable[str]):
    """Longest element of the spherical parabolic ``<J>`` as a GroupElement."""
    J = G.check(J)
    if not is_spherical(G, J):
        raise NotSpherical(f"{sorted(J)} is not spherical")
    from .words import engine_for

    return engine_for(G).longest(J)


def opposition(G: DefiningGraph, J: Iterable[str]) -> dict[str, str]:
    """The involution ``j -> w_J j w_J`` of ``J``."""
    J = G.check(J)
    if not J or not is_irreducible(G, J) or not is_spherical(G, J):
        raise InvalidSubset(f"{sorted(J)} must be irreducible spherical")
    from .words import engine_for

    E = engine_for(G)
    w = E.longest(J)
    out = {}
    for j in G.ordered(J):
        c = E.conjugate(w, E.generator(j))
        if len(c.word) != 1:
            raise AssertionError("conjugation by w_J does not preserve J")
        out[j] = c.letters[0]
    return out
