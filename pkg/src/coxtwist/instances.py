"""Instance files, generator-word files and the built-in catalog.

Instance file::

    cox v1
    gens a s t b
    edge a s 4
    edge s t 3

Absent edges have label infinity.  Generator-word files hold one
``name := letters`` line per generator, letters being words in the
reference generators.
"""

from __future__ import annotations

from itertools import combinations, product
from pathlib import Path
from typing import Iterable

from .errors import InputError
from .graph import DefiningGraph, INF, is_fc, is_irreducible, is_spherical

HEADER = "cox v1"


class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _content_lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def parse_instance(text: str) -> DefiningGraph:
    lines = list(_content_lines(text))
    if not lines or lines[0][1] != HEADER:
        raise ParseError(f"expected header {HEADER!r}", lines[0][0] if lines else 1)
    gens = None
    edges = []
    for no, line in lines[1:]:
        parts = line.split()
        if parts[0] == "gens":
            if gens is not None:
                raise ParseError("duplicate gens line", no)
            gens = parts[1:]
            if not gens:
                raise ParseError("empty gens line", no)
        elif parts[0] == "edge":
            if gens is None:
                raise ParseError("edge before gens", no)
            if len(parts) != 4:
                raise ParseError("edge needs: edge u v m", no)
            u, v, m = parts[1:]
            if u not in gens or v not in gens:
                raise ParseError(f"unknown generator in edge {u} {v}", no)
            try:
                mm = int(m)
            except ValueError:
                raise ParseError(f"label {m!r} is not an integer", no) from None
            if mm < 2:
                raise ParseError(f"label {mm} must be >= 2", no)
            if u == v:
                raise ParseError("loop edge", no)
            edges.append((u, v, mm, no))
        else:
            raise ParseError(f"unknown directive {parts[0]!r}", no)
    if gens is None:
        raise ParseError("missing gens line")
    seen = {}
    for u, v, m, no in edges:
        key = frozenset((u, v))
        if key in seen and seen[key] != m:
            raise ParseError(f"conflicting labels for {u}-{v}", no)
        seen[key] = m
    try:
        return DefiningGraph.from_edges(gens, [(u, v, m) for u, v, m, _ in edges])
    except InputError as exc:
        raise ParseError(str(exc)) from None


def serialize_instance(G: DefiningGraph) -> str:
    lines = [HEADER, "gens " + " ".join(G.generators)]
    lines += [f"edge {u} {v} {m}" for u, v, m in G.edges()]
    return "\n".join(lines) + "\n"


def load_instance(path: str | Path) -> DefiningGraph:
    return parse_instance(Path(path).read_text(encoding="utf-8"))


def parse_generator_words(text: str) -> dict[str, str]:
    """``name := letters`` lines, in file order."""
    out = {}
    for no, line in _content_lines(text):
        if ":=" not in line:
            raise ParseError("expected 'name := letters'", no)
        name, word = (x.strip() for x in line.split(":=", 1))
        if not name or " " in name:
            raise ParseError(f"bad generator name {name!r}", no)
        if name in out:
            raise ParseError(f"duplicate generator {name}", no)
        out[name] = word
    if not out:
        raise ParseError("no generators")
    return out


def serialize_generator_words(words: dict[str, Iterable[str]]) -> str:
    return "".join(f"{name} := {' '.join(letters)}\n" for name, letters in words.items())


# -- catalog -----------------------------------------------------------------

def _g(gens: str, *edges: tuple[str, str, int]) -> DefiningGraph:
    return DefiningGraph.from_edges(gens.split(), edges)


CATALOG: dict[str, DefiningGraph] = {
    "Q3": _g("a s t b", ("a", "s", 4), ("s", "t", 3), ("t", "b", 4)),
    "Q4": _g("a s t b", ("a", "s", 4), ("s", "t", 4), ("t", "b", 4)),
    "Q5": _g("a s t b", ("a", "s", 3), ("s", "t", 5), ("t", "b", 3)),
    "E1": _g("s t p q", ("s", "t", 3), ("t", "p", 3), ("s", "p", 2), ("t", "q", 4)),
    "E2": _g("s t p q x", ("s", "t", 3), ("t", "p", 3), ("s", "p", 2), ("t", "q", 4), ("p", "x", 3)),
    "E3": _g("s t p q x", ("s", "t", 3), ("t", "p", 3), ("s", "p", 2), ("t", "q", 4), ("p", "x", 3),
             ("q", "x", 3)),
    # Coxeter-Dynkin path: non-neighbours commute, so the group is F4
    "F4G": _g("u s t p", ("u", "s", 3), ("s", "t", 4), ("t", "p", 3), ("u", "t", 2), ("u", "p", 2),
              ("s", "p", 2)),
    "TRI333": _g("a b c", ("a", "b", 3), ("b", "c", 3), ("a", "c", 3)),
}

# Instances satisfying the standing hypotheses (irreducible, non-spherical, FC).
PIPELINE_INSTANCES = ("Q3", "Q4", "Q5", "E1", "E2", "E3")


def catalog(name: str) -> DefiningGraph:
    try:
        return CATALOG[name]
    except KeyError:
        raise InputError(f"unknown catalog instance {name!r}") from None


def pipeline_ok(G: DefiningGraph) -> bool:
    return (is_irreducible(G, G.generators) and not is_spherical(G, G.generators) and is_fc(G))


def find_instances(n: int, labels: Iterable[int], filters: Iterable[str] = (), cap: int = 100_000):
    """Enumerate graphs on ``n`` vertices with edge labels from ``labels``.

    Returns ``(entries, partial)``; each entry is ``(graph, flags)`` with one
    representative per label-preserving isomorphism class.  Graphs failing
    the pipeline hypotheses are dropped.  Recognised filters:
    ``3-rigid``, ``all-3-rigid``, ``dihedral-twistable``.
    """
    from .twist import canonical_form, is_k_rigid, twist_class, weakly_separates

    if not 1 <= n <= 7:
        raise InputError("n must be between 1 and 7")
    labels = sorted(set(int(m) for m in labels))
    filters = set(filters)
    unknown = filters - {"3-rigid", "all-3-rigid", "dihedral-twistable"}
    if unknown:
        raise InputError(f"unknown filters {sorted(unknown)}")
    gens = [f"v{i}" for i in range(n)]
    pairs = list(combinations(gens, 2))
    choices = [None] + labels
    seen = set()
    entries = []
    partial = False
    count = 0
    for assign in product(choices, repeat=len(pairs)):
        count += 1
        if count > cap:
            partial = True
            break
        G = DefiningGraph.from_edges(gens, [(u, v, m) for (u, v), m in zip(pairs, assign) if m is not None])
        key = canonical_form(G)
        if key in seen:
            continue
        seen.add(key)
        if not pipeline_ok(G):
            continue
        flags = {
            "3-rigid": is_k_rigid(G, 3),
            "dihedral-twistable": any(
                weakly_separates(G, {u, v}) for u, v in pairs
                if G.label(u, v) not in (2, INF) and is_spherical(G, {u, v})
            ),
        }
        if "all-3-rigid" in filters:
            cls, complete = twist_class(G, cap=1000)
            flags["all-3-rigid"] = complete and all(is_k_rigid(H, 3) for H in cls.values())
        if all(flags.get(f) for f in filters):
            entries.append((G, flags))
    return entries, partial
