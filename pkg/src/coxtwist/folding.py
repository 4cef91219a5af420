"""Foldings of a dihedral subgroup onto {s, Id, t} and the induced chamber maps."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable

from .davis import FundamentalDomain
from .errors import InvalidFolding, InvalidSubset
from .graph import INF, DefiningGraph
from .words import GroupElement, WordEngine, engine_for


def dihedral_engine(s: str, t: str, m) -> WordEngine:
    """Word engine of ``<s, t>`` with ``(st)^m = 1`` (``m = INF`` allowed)."""
    edges = [] if m == INF else [(s, t, m)]
    return engine_for(DefiningGraph.from_edges((s, t), edges))


@dataclass(frozen=True)
class Folding:
    """A map ``<s, t> -> {s, Id, t}``, given by a rule on canonical dihedral words."""

    s: str
    t: str
    m: object
    rule: Callable[[tuple], tuple]
    name: str = "custom"

    @property
    def engine(self) -> WordEngine:
        return dihedral_engine(self.s, self.t, self.m)

    def __call__(self, w) -> GroupElement:
        E = self.engine
        w = E.element(w)
        value = E.element(self.rule(w.letters))
        if len(value) > 1:
            raise InvalidFolding(f"folding value {value} is not in {{s, Id, t}}")
        return value

    def elements(self, window: int = 12) -> list[GroupElement]:
        E = self.engine
        radius = self.m if self.m != INF else window
        return E.enumerate_ball(radius)


def is_folding(f: Folding, window: int = 12) -> bool:
    """Both defining clauses over ``<s, t>`` (a ball of radius ``window`` when m is infinite)."""
    E = f.engine
    try:
        for w in f.elements(window):
            fw = f(w)
            for g in E.generators():
                fwg = f(E.multiply(w, g))
                if fwg != fw and fwg != E.multiply(fw, g):
                    return False
    except InvalidFolding:
        return False
    return True


def standard_folding(s: str, t: str, m, case: str) -> Folding:
    """The odd, even and ``m = 3`` example foldings.

    ``odd`` and ``even``: identity on ``{s, Id, t}``; on ``w_st {s, Id, t}``
    either left multiplication by ``w_st`` (odd) or ``Id`` (even); otherwise
    the first letter of the reduced word.  ``example`` (m = 3): identity on
    ``{s, Id, t}`` and the reflection ``w_st`` on the other three elements.
    """
    if m == INF or m < 3:
        raise InvalidSubset("foldings need a finite label m >= 3")
    if case == "odd" and m % 2 == 0 or case == "even" and m % 2 == 1:
        raise InvalidSubset(f"{case} folding needs {case} m, got {m}")
    if case == "example" and m != 3:
        raise InvalidSubset("example folding needs m = 3")
    if case not in ("odd", "even", "example"):
        raise InvalidSubset(f"unknown folding case {case!r}")
    E = dihedral_engine(s, t, m)
    w_st = E.longest((s, t))
    low = {E.identity, E.generator(s), E.generator(t)}
    high = {E.multiply(w_st, x) for x in low}

    def rule(letters):
        w = E.element(letters)
        if w in low:
            return w.letters
        if w in high:
            return () if case == "even" else E.multiply(w_st, w).letters
        return w.letters[:1]

    return Folding(s, t, m, rule, case)


def locate(V: FundamentalDomain, phi: Callable[[GroupElement], GroupElement], f: Folding,
           c: GroupElement) -> GroupElement:
    """The dihedral ``w`` with ``c`` in ``phi(w) V``, searched in ShortLex order.

    The number of dihedral walls between ``V`` and ``wV`` is ``len(w)``, so
    ``len(w) <= d(v0, c)`` for any ``v0`` in ``V`` bounds the search when m
    is infinite.
    """
    E = f.engine
    bound = len(V.representative) + len(c) + 1
    radius = f.m if f.m != INF else bound
    for w in E.enumerate_ball(radius):
        if V.translate_contains(phi(w), c):
            return w
    raise AssertionError(f"chamber {c} lies in no translate of the domain")


def folded_map(f: Folding, V: FundamentalDomain, c: GroupElement, phi=None) -> GroupElement:
    """``f~(c) = f(w) w^-1 c`` for the ``w`` with ``c`` in ``wV``.

    ``phi`` sends dihedral words to ambient elements; by default letters are
    read as the ambient generators of the same name.
    """
    amb = c.engine
    if phi is None:
        phi = lambda w: amb.element(w.letters)
    w = locate(V, phi, f, c)
    return amb.multiply(phi(f(w)), amb.inverse(phi(w)), c)


def injective_path(f: Folding, w: GroupElement, w2: GroupElement) -> bool:
    """Some path from ``w`` to ``w2`` in the dihedral Cayley graph on which ``f`` is injective.

    ``f`` takes three values, so such a path has at most two edges.
    """
    E = f.engine
    if w == w2:
        return True
    gens = E.generators()
    for a in gens:
        wa = E.multiply(w, a)
        if wa == w2 and f(w) != f(wa):
            return True
    for a, b in product(gens, repeat=2):
        wa = E.multiply(w, a)
        wab = E.multiply(wa, b)
        if wab == w2 and len({f(w), f(wa), f(wab)}) == 3:
            return True
    return False
