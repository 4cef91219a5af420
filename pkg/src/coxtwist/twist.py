"""Elementary twists, rigidity and twist classes of defining graphs."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Iterable

from .errors import CapExceeded, InvalidSubset, NotWeaklySeparating
from .graph import (INF, DefiningGraph, complement_components, is_irreducible, is_spherical,
                    opposition, perp, spherical_subsets)


@dataclass(frozen=True)
class ElementaryTwist:
    """Conjugate the side ``B`` of ``S \\ (J u J^perp)`` by ``w_J``."""

    J: frozenset
    A: frozenset
    B: frozenset

    def encode(self, G: DefiningGraph) -> tuple:
        return (len(self.J), G.subset_key(self.J), G.subset_key(self.B))

    def describe(self, G: DefiningGraph) -> str:
        return f"J={{{','.join(G.ordered(self.J))}}} B={{{','.join(G.ordered(self.B))}}}"


def weakly_separates(G: DefiningGraph, J: Iterable[str]) -> bool:
    J = G.check(J)
    if not (J and is_irreducible(G, J) and is_spherical(G, J)):
        raise InvalidSubset(f"{sorted(J)} must be irreducible spherical")
    return len(complement_components(G, J)) >= 2


def weakly_separating_sets(G: DefiningGraph) -> list[frozenset]:
    return [J for J in spherical_subsets(G, irreducible=True) if weakly_separates(G, J)]


def is_k_rigid(G: DefiningGraph, k: int) -> bool:
    return all(len(J) < k for J in weakly_separating_sets(G))


def rigidity_witnesses(G: DefiningGraph, k: int) -> list[frozenset]:
    return [J for J in weakly_separating_sets(G) if len(J) >= k]


def twist_for(G: DefiningGraph, J: Iterable[str], B: Iterable[str]) -> ElementaryTwist:
    """Validate ``(J, B)`` and complete it to a twist."""
    J = G.check(J)
    B = G.check(B)
    if not weakly_separates(G, J):
        raise NotWeaklySeparating(f"{sorted(J)} does not weakly separate")
    comps = complement_components(G, J)
    rest = frozenset().union(*comps)
    if not B or not B < rest:
        raise InvalidSubset("B must be a nonempty proper part of S \\ (J u J^perp)")
    for c in comps:
        if c & B and not c <= B:
            raise InvalidSubset("B must be a union of components")
    return ElementaryTwist(J, rest - B, B)


def enumerate_twists(G: DefiningGraph, max_J: int | None = None) -> list[ElementaryTwist]:
    """All elementary twists, one per bipartition (``B`` avoids the first component)."""
    out = []
    for J in weakly_separating_sets(G):
        if max_J is not None and len(J) > max_J:
            continue
        comps = complement_components(G, J)
        others = comps[1:]
        rest = frozenset().union(*comps)
        for mask in product((0, 1), repeat=len(others)):
            if not any(mask):
                continue
            B = frozenset().union(*(c for c, bit in zip(others, mask) if bit))
            out.append(ElementaryTwist(J, rest - B, B))
    return sorted(out, key=lambda t: t.encode(G))


def apply_twist_graph(G: DefiningGraph, tau: ElementaryTwist) -> DefiningGraph:
    """Defining graph of the twisted set: B-J labels pass through the opposition of J."""
    op = opposition(G, tau.J)
    labels = {}
    for u, v in combinations(G.generators, 2):
        if u in tau.B and v in tau.J:
            m = G.label(u, op[v])
        elif v in tau.B and u in tau.J:
            m = G.label(v, op[u])
        else:
            m = G.label(u, v)
        if m != INF:
            labels[frozenset((u, v))] = m
    return DefiningGraph(G.generators, labels)


def apply_twist_generators(S, tau: ElementaryTwist, verify: bool = False):
    """Twist a GeneratingSet: each ``b`` in ``B`` becomes ``w_J b w_J^-1``."""
    from .marking import GeneratingSet, graph_from_elements

    E = S.engine
    wJ = S.resolve(S.ref.longest(tau.J).letters)
    elems = tuple(E.conjugate(wJ, x) if lab in tau.B else x for lab, x in zip(S.labels, S.elements))
    graph = apply_twist_graph(S.graph, tau)
    if verify and graph_from_elements(E, S.labels, elems) != graph:
        raise AssertionError("twisted graph disagrees with product orders")
    return GeneratingSet(E, S.labels, elems, graph)


def L_tau(G: DefiningGraph, L: Iterable[str], tau: ElementaryTwist,
          ambient: Iterable[str] | None = None) -> frozenset:
    """Label set of ``L_tau`` in the twisted set.

    ``ambient`` is the maximal spherical set deciding the side (defaults to
    ``L``).  Labels keep their names under a twist; on the ``B`` side the
    elements of ``J`` are renamed through the opposition involution.
    """
    L = G.check(L)
    M = G.check(ambient) if ambient is not None else L
    Jp = tau.J | perp(G, tau.J)
    if M <= tau.A | Jp:
        return L
    if M <= tau.B | Jp:
        op = opposition(G, tau.J)
        return frozenset(op.get(x, x) for x in L)
    raise AssertionError("maximal spherical set meets both sides of the twist")


# -- canonical forms and twist classes ---------------------------------------

MAX_CANON = 8


def _code(m) -> int:
    return 0 if m == INF else int(m)


def canonical_form(G: DefiningGraph) -> tuple:
    """Isomorphism-invariant key for labelled graphs (exhaustive within refined cells)."""
    gens = G.generators
    n = len(gens)
    if n > MAX_CANON:
        raise CapExceeded(f"canonical form limited to {MAX_CANON} generators")
    mat = [[_code(G.label(u, v)) if u != v else 1 for v in gens] for u in gens]
    colour = [tuple(sorted(mat[i][j] for j in range(n) if j != i)) for i in range(n)]
    # refine colours by neighbour colours until stable
    while True:
        new = [(colour[i], tuple(sorted((mat[i][j], colour[j]) for j in range(n) if j != i)))
               for i in range(n)]
        ranks = {c: k for k, c in enumerate(sorted(set(new)))}
        new = [ranks[c] for c in new]
        if len(set(new)) == len(set(colour)):
            colour = new
            break
        colour = new
    cells = {}
    for i in range(n):
        cells.setdefault(colour[i], []).append(i)
    ordered = [cells[c] for c in sorted(cells)]
    best = None
    for choice in product(*(permutations(c) for c in ordered)):
        order = [i for part in choice for i in part]
        code = tuple(mat[order[a]][order[b]] for a in range(n) for b in range(a + 1, n))
        if best is None or code < best:
            best = code
    sizes = tuple(len(c) for c in ordered)
    return (n, sizes, best)


def canonical_graph(key: tuple) -> DefiningGraph:
    n, _, code = key
    gens = [f"v{i}" for i in range(n)]
    edges = []
    k = 0
    for a in range(n):
        for b in range(a + 1, n):
            if code[k]:
                edges.append((gens[a], gens[b], code[k]))
            k += 1
    return DefiningGraph.from_edges(gens, edges)


def twist_class(G: DefiningGraph, cap: int = 100_000):
    """Closure of ``G`` under graph-level twists, up to isomorphism.

    Returns ``(classes, complete)`` where ``classes`` maps canonical keys to a
    representative graph; ``complete`` is False when the cap cut the search.
    """
    start = canonical_form(G)
    classes = {start: G}
    queue = deque([G])
    while queue:
        H = queue.popleft()
        for tau in enumerate_twists(H):
            H2 = apply_twist_graph(H, tau)
            key = canonical_form(H2)
            if key not in classes:
                if len(classes) >= cap:
                    return classes, False
                classes[key] = H2
                queue.append(H2)
    return classes, True


def all_equivalents_3_rigid(G: DefiningGraph, cap: int = 100_000) -> tuple[bool, bool]:
    """``(verdict, complete)`` for 3-rigidity across the twist class."""
    classes, complete = twist_class(G, cap)
    return all(is_k_rigid(H, 3) for H in classes.values()), complete
