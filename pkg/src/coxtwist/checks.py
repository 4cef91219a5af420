"""Exhaustive instance checks shared by ``coxtwist verify`` and the acceptance suite.

Each check returns a ``CheckResult`` with counts and the first few
exceptions, so a failure names the offending object.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graph import (INF, complement_components, is_fc, is_irreducible, is_spherical,
                    spherical_subsets)
from .instances import PIPELINE_INSTANCES, catalog
from .marking import (GeneratingSet, K_support, bases_with_core, doubles_consistent, is_exposed,
                      is_good_element, is_good_pair, irreducible_spherical_pairs, marking_halfspace,
                      markings_with_core, move_equivalent, move_neighbors)
from .twist import (L_tau, apply_twist_generators, apply_twist_graph, enumerate_twists, is_k_rigid,
                    weakly_separates)

MAX_EXAMPLES = 5


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and self.checked > 0

    def fail(self, what):
        self.failures.append(what)

    def lines(self) -> list[str]:
        out = [f"{self.name}: checked {self.checked}, exceptions {len(self.failures)}"]
        out += [f"  note: {n}" for n in self.notes]
        out += [f"  exception: {f}" for f in self.failures[:MAX_EXAMPLES]]
        return out


def rigid_instances(names=None) -> list[str]:
    names = names or PIPELINE_INSTANCES
    return [n for n in names if is_k_rigid(catalog(n), 3)]


# -- markings -------------------------------------------------------------------

def check_move_invariance(names=("Q3", "Q4", "Q5", "E1")) -> CheckResult:
    """M1/M2 moves preserve the marking halfspace, over every marking edge."""
    res = CheckResult("move-invariance")
    for name in names:
        S = GeneratingSet.reference(catalog(name))
        for s in S.graph.generators:
            for mu in markings_with_core(S, s):
                phi = marking_halfspace(S, mu)
                for nu in move_neighbors(S, mu):
                    res.checked += 1
                    if marking_halfspace(S, nu) != phi:
                        res.fail(f"{name}: {mu} -> {nu}")
    return res


def _base_extension(S: GeneratingSet, w_letters, mu, I) -> bool:
    """``mu``'s base word is ``w w_i`` with ``w_i`` a product of distinct letters outside ``I``."""
    R = S.ref
    w = R.element(list(w_letters))
    full = R.element(list(mu.base.letters))
    u = R.multiply(R.inverse(w), full)
    if len(u) + len(w) != len(full):
        return False
    letters = u.letters
    return len(set(letters)) == len(letters) and not set(letters) & I


def check_same_component(names=None) -> CheckResult:
    """Markings extending one base, with K in one component, are move-equivalent."""
    res = CheckResult("same-component markings")
    for name in rigid_instances(names):
        S = GeneratingSet.reference(catalog(name))
        G = S.graph
        irr = [J for J in spherical_subsets(G, irreducible=True)]
        for s in G.generators:
            markings = markings_with_core(S, s)
            for b in bases_with_core(S, s):
                I = b.support
                if any(I < J and weakly_separates(G, J) for J in irr):
                    continue
                comps = complement_components(G, I)
                ext = [mu for mu in markings if I <= mu.support and _base_extension(S, b.letters, mu, I)]
                keyed = []
                for mu in ext:
                    K = K_support(S, mu, I)
                    where = {i for i, c in enumerate(comps) if K & c}
                    if len(where) == 1:
                        keyed.append((where.pop(), mu))
                for (c1, m1), (c2, m2) in combinations(keyed, 2):
                    if c1 != c2:
                        continue
                    res.checked += 1
                    if not move_equivalent(S, m1, m2):
                        res.fail(f"{name}: {m1} !~ {m2}")
                    elif marking_halfspace(S, m1) != marking_halfspace(S, m2):
                        res.fail(f"{name}: {m1}, {m2} halfspaces differ")
    return res


def check_good_exposed(names=None) -> CheckResult:
    """Good pairs contain a good element; all pairs bad forces exposure."""
    res = CheckResult("good/exposed calculus")
    for name in rigid_instances(names):
        S = GeneratingSet.reference(catalog(name))
        G = S.graph
        for L in spherical_subsets(G, irreducible=True):
            pairs = [frozenset(p) for p in combinations(G.ordered(L), 2) if not G.commute(*p)]
            for r in G.generators:
                if r in L:
                    continue
                for P in pairs:
                    if is_good_pair(S, L, P, r):
                        res.checked += 1
                        s, t = G.ordered(P)
                        if not (is_good_element(S, L, s, r) or is_good_element(S, L, t, r)):
                            res.fail(f"{name}: L={sorted(L)} pair {s}{t} r={r}: no good element")
                if not is_spherical(G, L | {r}):
                    res.checked += 1
                    if not any(is_good_pair(S, L, P, r) for P in pairs) and not is_exposed(G, L):
                        res.fail(f"{name}: L={sorted(L)} r={r}: no good pair but not exposed")
    return res


# -- twists ---------------------------------------------------------------------

def check_twists(names=None) -> CheckResult:
    """Graph rule vs product orders, FC invariance and exposure preservation."""
    res = CheckResult("twist correctness")
    names = names or catalog_names()
    for name in names:
        G = catalog(name)
        S = GeneratingSet.reference(G)
        fc = is_fc(G)
        for tau in enumerate_twists(G):
            H = apply_twist_graph(G, tau)
            T = apply_twist_generators(S, tau)
            E = S.engine
            for x, y in combinations(G.generators, 2):
                res.checked += 1
                m = E.product_order(T.element(x), T.element(y), 100)
                m = INF if not isinstance(m, int) else m
                if m != H.label(x, y):
                    res.fail(f"{name} {tau.describe(G)}: {x}{y} rule {H.label(x, y)} vs order {m}")
            res.checked += 1
            if is_fc(H) != fc:
                res.fail(f"{name} {tau.describe(G)}: FC changed")
            if not fc:
                continue
            for L in spherical_subsets(G, irreducible=True):
                if len(L) != 3 or not is_exposed(G, L):
                    continue
                if not any(L < M and is_irreducible(G, M) for M in spherical_subsets(G, irreducible=True)):
                    res.checked += 1
                    Lt = L_tau(G, L, tau)
                    if not is_exposed(H, Lt):
                        res.fail(f"{name} {tau.describe(G)}: {sorted(L)} -> {sorted(Lt)} not exposed")
    return res


def check_twist_involution(names=None) -> CheckResult:
    res = CheckResult("twist involution")
    for name in names or PIPELINE_INSTANCES:
        S = GeneratingSet.reference(catalog(name))
        for tau in enumerate_twists(S.graph):
            res.checked += 1
            T = apply_twist_generators(apply_twist_generators(S, tau), tau)
            if T.key() != S.key():
                res.fail(f"{name} {tau.describe(S.graph)}")
    return res


def catalog_names():
    from .instances import CATALOG
    return tuple(CATALOG)


# -- doubles ---------------------------------------------------------------------

def check_doubles(names=None) -> CheckResult:
    """Reference sets have consistent doubles; twisted Q3 has the inconsistent double {s,t}."""
    res = CheckResult("doubles")
    for name in rigid_instances(names):
        S = GeneratingSet.reference(catalog(name))
        for P in irreducible_spherical_pairs(S.graph):
            res.checked += 1
            if not doubles_consistent(S, P):
                res.fail(f"{name}: reference double {sorted(P)} inconsistent")
    if names is None or "Q3" in names:
        G = catalog("Q3")
        tau = next(t for t in enumerate_twists(G) if t.J == frozenset("st"))
        T = apply_twist_generators(GeneratingSet.reference(G), tau)
        res.checked += 1
        if doubles_consistent(T, {"s", "t"}):
            res.fail("twisted Q3: {s,t} consistent")
        res.notes.append("twisted Q3: {s,t} inconsistent as expected" if not res.failures else "")
    return res


# -- folding lemma ------------------------------------------------------------------

FOLD_CASES = (("Q3", "odd"), ("Q4", "even"), ("Q5", "odd"))


def check_fold_lemma(names=None, radius: int = 6) -> CheckResult:
    """Contraction and the equality criterion for the standard foldings."""
    from functools import lru_cache

    from .folding import injective_path, is_folding, locate, standard_folding
    from .marking import domains_for

    res = CheckResult("fold-lemma")
    for name, case in FOLD_CASES:
        if names and name not in names:
            continue
        G = catalog(name)
        S = GeneratingSet.reference(G)
        A = S.engine
        f = standard_folding("s", "t", G.label("s", "t"), case)
        if not is_folding(f):
            res.fail(f"{name}: {case} map is not a folding")
        crit = lru_cache(maxsize=None)(lambda a, b: injective_path(f, a, b))
        phi = lambda w: A.element(w.letters)
        ball = A.enumerate_ball(radius)
        dist = A.kernel.distance
        for V in domains_for(S, {"s", "t"}):
            loc, img = {}, {}
            for c in ball:
                w = locate(V, phi, f, c)
                loc[c] = w
                img[c] = A.multiply(phi(f(w)), A.inverse(phi(w)), c).word
            for x in ball:
                wx, fx = loc[x], img[x]
                for y in ball:
                    res.checked += 1
                    d = dist(x.word, y.word)
                    d2 = dist(fx, img[y])
                    if d2 > d or (d2 == d) != crit(wx, loc[y]):
                        res.fail(f"{name} V@{V.representative}: {x}, {y}: d={d} folded={d2}")
    return res


# -- dispatcher ---------------------------------------------------------------------

def run(name: str, instances=None, radius: int = 6, rng=None) -> tuple[bool, list[str]]:
    if name == "f4-roots":
        from .f4 import f4_root_identity
        rep = f4_root_identity(strict=False)
        return rep.ok, rep.lines()
    if name == "move-invariance":
        res = check_move_invariance(instances or ("Q3", "Q4", "Q5", "E1"))
    elif name == "fold-lemma":
        res = check_fold_lemma(instances, min(radius, 6))
    elif name == "exposed-preserved":
        res = check_twists(instances)
    elif name == "doubles":
        res = check_doubles(instances)
    else:
        raise ValueError(f"unknown check {name}")
    return res.ok, res.lines()
