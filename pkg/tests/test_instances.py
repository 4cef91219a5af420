from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from coxtwist.graph import DefiningGraph
from coxtwist.instances import (CATALOG, ParseError, catalog, find_instances, parse_generator_words,
                                parse_instance, serialize_generator_words, serialize_instance)
from coxtwist.twist import canonical_form


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_roundtrip_catalog(name):
    G = catalog(name)
    text = serialize_instance(G)
    assert parse_instance(text) == G
    assert serialize_instance(parse_instance(text)) == text


@given(st.lists(st.sampled_from([2, 3, 4, 5, 6, None]), min_size=10, max_size=10))
def test_roundtrip_random(assign):
    gens = ["v0", "v1", "v2", "v3", "v4"]
    G = DefiningGraph.from_edges(gens, [(u, v, m) for (u, v), m in zip(combinations(gens, 2), assign) if m])
    assert parse_instance(serialize_instance(G)) == G


@pytest.mark.parametrize("text,line", [
    ("cox v2\ngens a b\n", 1),
    ("cox v1\ngens a b\nedge a b x\n", 3),
    ("cox v1\ngens a b\nedge a c 3\n", 3),
    ("cox v1\nedge a b 3\n", 2),
    ("cox v1\ngens a b\nedge a b 1\n", 3),
    ("cox v1\ngens a b\nnode a\n", 3),
    ("cox v1\ngens a b\nedge a b 3\nedge b a 4\n", 4),
])
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as exc:
        parse_instance(text)
    assert exc.value.line == line


def test_comments_and_blank_lines():
    G = parse_instance("# header comment\ncox v1\n\ngens a b  # two\nedge a b 3\n")
    assert G.label("a", "b") == 3


def test_generator_words():
    words = {"a": ("a",), "b": ("s", "t", "s", "b", "s", "t", "s")}
    text = serialize_generator_words(words)
    assert "b := s t s b s t s" in text
    assert parse_generator_words(text) == {"a": "a", "b": "s t s b s t s"}
    with pytest.raises(ParseError):
        parse_generator_words("a = b\n")
    with pytest.raises(ParseError):
        parse_generator_words("a := a\na := b\n")


def test_find_instances_contains_q_family():
    entries, partial = find_instances(4, [2, 3, 4, 5])
    assert not partial
    keys = {canonical_form(G) for G, _ in entries}
    for name in ("Q3", "Q4", "Q5"):
        assert canonical_form(catalog(name)) in keys


def test_find_instances_filters():
    entries, _ = find_instances(4, [3, 4], ["dihedral-twistable"])
    assert entries and all(flags["dihedral-twistable"] for _, flags in entries)
    assert find_instances(1, [3])[0] == []


def test_find_instances_deterministic():
    a, _ = find_instances(3, [3, 4])
    b, _ = find_instances(3, [3, 4])
    assert [serialize_instance(G) for G, _ in a] == [serialize_instance(G) for G, _ in b]
