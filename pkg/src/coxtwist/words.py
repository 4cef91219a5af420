"""Exact word problem: canonical ShortLex words, products, reflections, balls."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from . import kernel as _kernel
from .braid import BraidKernel
from .errors import CapExceeded, InvalidWord, NotAReflection, RadiusExhausted
from .graph import DefiningGraph


@dataclass(frozen=True)
class InfiniteAtCutoff:
    """Verdict of ``product_order`` when no power up to ``cutoff`` is trivial."""

    cutoff: int

    def __str__(self):
        return f"InfiniteAtCutoff({self.cutoff})"


class GroupElement:
    """An element of W stored as its canonical (ShortLex-least reduced) word."""

    __slots__ = ("engine", "word")

    def __init__(self, engine: "WordEngine", word: tuple[int, ...]):
        self.engine = engine
        self.word = word

    @property
    def graph(self) -> DefiningGraph:
        return self.engine.graph

    @property
    def letters(self) -> tuple[str, ...]:
        gens = self.engine.graph.generators
        return tuple(gens[i] for i in self.word)

    def __len__(self):
        return len(self.word)

    def __eq__(self, other):
        return (isinstance(other, GroupElement) and self.word == other.word
                and self.engine is other.engine)

    def __hash__(self):
        return hash(self.word)

    def __lt__(self, other):
        # ShortLex
        return (len(self.word), self.word) < (len(other.word), other.word)

    def __mul__(self, other):
        return self.engine.multiply(self, other)

    def inverse(self):
        return self.engine.inverse(self)

    def is_identity(self) -> bool:
        return not self.word

    def __str__(self):
        return " ".join(self.letters) if self.word else "e"

    def __repr__(self):
        return f"<{self}>"


@dataclass(frozen=True)
class Reflection:
    """A reflection ``element = u s u^-1`` with ``len(element) = 2 len(u) + 1``."""

    element: GroupElement
    u: GroupElement
    generator: str


class WordEngine:
    """Word problem for one Coxeter system.

    The Z[phi] root kernel handles labels 2, 3, 4, 5, 6, 10 and infinity;
    other labels fall back to braid-move rewriting.
    """

    def __init__(self, graph: DefiningGraph, backend: str | None = None):
        self.graph = graph
        labels = graph.label_matrix(zero_for_inf=True)
        if backend == "braid" or not _kernel.supports(labels):
            self.kernel = BraidKernel(labels)
        else:
            self.kernel = _kernel.make_root_kernel(labels, backend)
        self.backend = self.kernel.backend
        self.n = len(graph.generators)
        self.identity = GroupElement(self, ())
        self._gens = tuple(GroupElement(self, (i,)) for i in range(self.n))

    # -- construction ------------------------------------------------------
    def _letters(self, raw) -> tuple[int, ...]:
        gens = self.graph.generators
        idx = self.graph._index
        if isinstance(raw, GroupElement):
            if raw.engine is not self:
                raise InvalidWord("element belongs to a different group")
            return raw.word
        if isinstance(raw, str):
            raw = raw.strip()
            if not raw or raw in ("e", "1"):
                return ()
            if raw in idx:
                return (idx[raw],)
            if any(ch.isspace() for ch in raw):
                tokens = raw.split()
            elif all(ch in idx for ch in raw):
                tokens = list(raw)
            else:
                raise InvalidWord(f"cannot parse word {raw!r} over {' '.join(gens)}")
        else:
            tokens = list(raw)
        out = []
        for tok in tokens:
            if isinstance(tok, int):
                if not 0 <= tok < self.n:
                    raise InvalidWord(f"letter index {tok} out of range")
                out.append(tok)
            elif tok in idx:
                out.append(idx[tok])
            else:
                raise InvalidWord(f"unknown letter {tok!r}")
        return tuple(out)

    def element(self, raw) -> GroupElement:
        """Canonicalize a raw word (string, letter sequence or element)."""
        if isinstance(raw, GroupElement) and raw.engine is self:
            return raw
        return GroupElement(self, self.kernel.reduce(self._letters(raw)))

    canonicalize = element

    def from_word(self, word: Sequence[int]) -> GroupElement:
        return GroupElement(self, self.kernel.reduce(tuple(word)))

    def generator(self, name: str) -> GroupElement:
        return self._gens[self.graph.index(name)]

    def generators(self) -> tuple[GroupElement, ...]:
        return self._gens

    # -- group operations --------------------------------------------------
    def multiply(self, *xs: GroupElement) -> GroupElement:
        word = ()
        for x in xs:
            word += self._letters(x)
        return GroupElement(self, self.kernel.reduce(word))

    def inverse(self, x: GroupElement) -> GroupElement:
        return GroupElement(self, self.kernel.reduce(tuple(reversed(self._letters(x)))))

    def length(self, x) -> int:
        if isinstance(x, GroupElement):
            return len(x.word)
        return self.kernel.length(self._letters(x))

    def conjugate(self, w: GroupElement, x: GroupElement) -> GroupElement:
        """``w x w^-1``."""
        ww = self._letters(w)
        return GroupElement(self, self.kernel.reduce(ww + self._letters(x) + tuple(reversed(ww))))

    def distance(self, x: GroupElement, y: GroupElement) -> int:
        """Gallery distance ``len(x^-1 y)``."""
        return self.kernel.distance(x.word, y.word)

    def is_involution(self, x: GroupElement) -> bool:
        return bool(x.word) and self.kernel.is_identity(x.word + x.word)

    def left_descents(self, x: GroupElement) -> tuple[int, ...]:
        return self.kernel.left_descents(x.word)

    def right_descents(self, x: GroupElement) -> tuple[int, ...]:
        return self.kernel.left_descents(tuple(reversed(x.word)))

    def product_order(self, x: GroupElement, y: GroupElement, cutoff: int = 100):
        """Order of ``xy``, or ``InfiniteAtCutoff`` if it exceeds ``cutoff``."""
        if cutoff < 1:
            raise ValueError("cutoff must be >= 1")
        k = self.kernel.order(self._letters(x) + self._letters(y), cutoff)
        return k if k else InfiniteAtCutoff(cutoff)

    # -- reflections -------------------------------------------------------
    def reflection_form(self, g: GroupElement) -> Reflection:
        """Split a reflection as ``u s u^-1`` with ``u`` of minimal length.

        Walks down along the least left descent: if ``p`` is a left descent
        of a reflection ``y != p`` then ``len(p y p) = len(y) - 2``.
        """
        g = self.element(g)
        if not g.word:
            raise NotAReflection("identity is not a reflection")
        if len(g.word) % 2 == 0 or not self.is_involution(g):
            raise NotAReflection(f"{g} is not a reflection")
        y = g.word
        u = []
        red = self.kernel.reduce
        while len(y) > 1:
            p = y[0]
            z = red((p,) + y + (p,))
            if len(z) != len(y) - 2:
                raise NotAReflection(f"{g} is not a reflection")
            u.append(p)
            y = z
        return Reflection(g, GroupElement(self, tuple(u)), self.graph.generators[y[0]])

    def is_reflection(self, g: GroupElement) -> bool:
        try:
            self.reflection_form(g)
        except NotAReflection:
            return False
        return True

    # -- enumeration -------------------------------------------------------
    def enumerate_ball(self, radius: int, cap: int = 100_000) -> list[GroupElement]:
        """All elements of length <= radius in BFS (then ShortLex) order."""
        if radius < 0:
            raise ValueError("radius must be >= 0")
        words = self.kernel.ball(radius, cap)
        if words is None:
            raise RadiusExhausted(f"ball of radius {radius} exceeds cap {cap}")
        return [GroupElement(self, w) for w in words]

    def subgroup_elements(self, J: Iterable[str], cap: int = 100_000) -> list[GroupElement]:
        """Elements of the standard parabolic ``<J>``, ShortLex ordered."""
        letters = sorted(self.graph.index(j) for j in J)
        seen = {()}
        layer = [()]
        red = self.kernel.reduce
        while layer:
            nxt = set()
            for w in layer:
                for j in letters:
                    v = red(w + (j,))
                    if len(v) > len(w) and v not in seen:
                        nxt.add(v)
            seen |= nxt
            if len(seen) > cap:
                raise CapExceeded(f"parabolic subgroup exceeds cap {cap}")
            layer = nxt
        return [GroupElement(self, w) for w in sorted(seen, key=lambda w: (len(w), w))]

    def longest(self, J: Iterable[str]) -> GroupElement:
        """Longest element of a spherical ``<J>`` (caller checks sphericity)."""
        letters = sorted(self.graph.index(j) for j in J)
        w = ()
        red = self.kernel.reduce
        while True:
            for j in letters:
                v = red(w + (j,))
                if len(v) > len(w):
                    w = v
                    break
            else:
                return GroupElement(self, w)

    def min_left_coset_rep(self, c: GroupElement, K: Iterable[str]) -> GroupElement:
        """Shortest element of ``c <K>``."""
        letters = [self.graph.index(k) for k in K]
        w = c.word
        red = self.kernel.reduce
        changed = True
        while changed:
            changed = False
            for k in letters:
                v = red(w + (k,))
                if len(v) < len(w):
                    w = v
                    changed = True
        return GroupElement(self, w)

    def min_double_coset_rep(self, K1: Iterable[str], x: GroupElement, K2: Iterable[str]) -> GroupElement:
        """Shortest element of ``<K1> x <K2>``."""
        l1 = [self.graph.index(k) for k in K1]
        l2 = [self.graph.index(k) for k in K2]
        w = x.word
        red = self.kernel.reduce
        changed = True
        while changed:
            changed = False
            for k in l1:
                v = red((k,) + w)
                if len(v) < len(w):
                    w = v
                    changed = True
            for k in l2:
                v = red(w + (k,))
                if len(v) < len(w):
                    w = v
                    changed = True
        return GroupElement(self, w)

    def support(self, x: GroupElement) -> frozenset:
        """Generators occurring in the (any) reduced word of ``x``."""
        gens = self.graph.generators
        return frozenset(gens[i] for i in x.word)


@lru_cache(maxsize=256)
def engine_for(graph: DefiningGraph, backend: str | None = None) -> WordEngine:
    return WordEngine(graph, backend)


def canonicalize(graph: DefiningGraph, raw) -> GroupElement:
    return engine_for(graph).element(raw)


def multiply(x: GroupElement, y: GroupElement) -> GroupElement:
    if x.engine is not y.engine:
        raise InvalidWord("elements of different groups")
    return x.engine.multiply(x, y)


def inverse(x: GroupElement) -> GroupElement:
    return x.engine.inverse(x)


def length(x: GroupElement) -> int:
    return len(x.word)


def conjugate(w: GroupElement, x: GroupElement) -> GroupElement:
    if w.engine is not x.engine:
        raise InvalidWord("elements of different groups")
    return w.engine.conjugate(w, x)


def reflection_form(g: GroupElement) -> Reflection:
    return g.engine.reflection_form(g)


def product_order(x: GroupElement, y: GroupElement, cutoff: int = 100):
    return x.engine.product_order(x, y, cutoff)


def enumerate_ball(graph: DefiningGraph, radius: int, cap: int = 100_000) -> list[GroupElement]:
    return engine_for(graph).enumerate_ball(radius, cap)
