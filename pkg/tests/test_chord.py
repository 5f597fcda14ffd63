import json
import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from chordex.chord import (
    ChordDiagram,
    ClassLabel,
    RandomPolicy,
    canonical_key,
    crossings,
    dumps,
    ex,
    expand_step,
    expansion_tree_dot,
    from_json,
    loads,
    ncd,
    random_diagram,
    to_json,
)
from chordex.families import build_Enk, build_crossing
from chordex.sequences import entringer

from conftest import random_diagrams


def brute_crossings(d):
    out = []
    for c1, c2 in combinations(d.chords, 2):
        a, b, c, e = sorted(c1 + c2)
        if {c1, c2} == {(a, c), (b, e)}:
            out.append((c1, c2))
    return sorted(out)


@st.composite
def diagrams(draw, max_chords=6):
    k = draw(st.integers(0, max_chords))
    iso = draw(st.integers(0, 2))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_diagram(random.Random(seed), k, iso)


def test_crossing_detection_basic(c2):
    assert crossings(c2) == [((1, 3), (2, 4))]
    assert crossings(ChordDiagram(4, [(1, 2), (3, 4)])) == []
    assert crossings(ChordDiagram(4, [(1, 4), (2, 3)])) == []


def test_three_crossing_has_three_crossings():
    d = build_crossing(3)
    assert len(crossings(d)) == 3
    assert crossings(d) == brute_crossings(d)


@given(diagrams())
def test_crossings_match_sorted_endpoint_definition(d):
    assert crossings(d) == brute_crossings(d)


def test_invalid_diagrams_rejected():
    with pytest.raises(ValueError):
        ChordDiagram(4, [(1, 2), (2, 3)])
    with pytest.raises(ValueError):
        ChordDiagram(4, [(1, 5)])
    with pytest.raises(ValueError):
        ChordDiagram(4, [(1, 1)])
    with pytest.raises(ValueError):
        ChordDiagram(4, [(1, 2)], {1: ClassLabel("X", 1)})


def test_isolated_vertices_allowed():
    d = ChordDiagram(7, [(1, 5), (2, 6)])
    assert len(crossings(d)) == 1


def test_expand_step_six_vertex_example():
    d = ChordDiagram(6, [(1, 5), (2, 6)])
    e1, e2 = expand_step(d, ((1, 5), (2, 6)))
    assert e1.chords == ((1, 2), (5, 6))
    assert e2.chords == ((1, 6), (2, 5))
    assert e1.num_vertices == e2.num_vertices == 6


def test_expand_step_c2(c2):
    e1, e2 = expand_step(c2, crossings(c2)[0])
    assert e1.chords == ((1, 2), (3, 4))
    assert e2.chords == ((1, 4), (2, 3))
    assert crossings(e1) == crossings(e2) == []


def test_expand_step_keeps_other_chords_and_labels():
    d = build_crossing(3)
    s = crossings(d)[1]
    for child in expand_step(d, s):
        untouched = set(d.chords) - set(s)
        assert untouched <= set(child.chords)
        assert child.classes == d.classes


def test_expand_step_rejects_non_crossing():
    d = ChordDiagram(6, [(1, 2), (3, 4), (5, 6)])
    with pytest.raises(ValueError):
        expand_step(d, ((1, 2), (3, 4)))
    with pytest.raises(ValueError):
        expand_step(d, ((1, 3), (2, 4)))


@settings(max_examples=60)
@given(diagrams())
def test_expansion_strictly_reduces_crossings(d):
    n = len(crossings(d))
    for s in crossings(d):
        for child in expand_step(d, s):
            assert len(crossings(child)) < n


def test_ncd_of_nonintersecting_is_singleton():
    d = ChordDiagram(6, [(1, 6), (2, 3), (4, 5)])
    ms = ncd(d)
    assert ms.counts() == {canonical_key(d): 1}
    assert ex(d) == 1


def test_ncd_c2(c2):
    ms = ncd(c2)
    assert len(ms) == 2
    assert sorted(m for _, m in ms.items()) == [1, 1]


def test_ncd_c3_total():
    assert ncd(build_crossing(3)).total() == 5


def test_ex_examples():
    assert ex(build_crossing(4)) == 16
    # E_{2,1} against the Entringer value Ent_{4,2} = 4 from the permutation oracle.
    assert ex(build_Enk(2, 1)) == entringer(4, 2) == 4


@settings(max_examples=60)
@given(diagrams(max_chords=6))
def test_leaves_valid_and_chords_conserved(d):
    ms = ncd(d)
    assert ms.total() == ex(d)
    for leaf, mult in ms.items():
        assert mult >= 1
        assert crossings(leaf) == []
        assert leaf.num_vertices == d.num_vertices
        assert len(leaf.chords) == len(d.chords)
        assert {v for c in leaf.chords for v in c} == {v for c in d.chords for v in c}


@settings(max_examples=60)
@given(diagrams(max_chords=6))
def test_ex_is_one_exactly_for_nonintersecting(d):
    value = ex(d)
    assert value >= 1
    assert (value == 1) == (crossings(d) == [])


@pytest.mark.parametrize("d", random_diagrams(11, 40, 6), ids=str)
def test_confluence_random_vs_lex(d):
    lex = ncd(d)
    for seed in range(3):
        assert ncd(d, policy=RandomPolicy(seed), memo=False) == lex


def test_memoized_and_plain_expansion_agree():
    d = build_crossing(5)
    assert ncd(d) == ncd(d, memo=False)


def test_canonical_key_set_semantics():
    a = ChordDiagram(4, [(2, 4), (1, 3)])
    b = ChordDiagram(4, [(3, 1), (4, 2)])
    assert canonical_key(a) == canonical_key(b) == (4, ((1, 3), (2, 4)))
    assert canonical_key(a) != canonical_key(ChordDiagram(4, [(1, 2), (3, 4)]))
    assert canonical_key(a) != canonical_key(ChordDiagram(5, [(1, 3), (2, 4)]))


def test_json_format_and_round_trip():
    text = '{"num_vertices": 6, "chords": [[1,5],[2,6]], "classes": {"1":"X1","2":"X2","5":"Y2","6":"Y1"}}'
    d = loads(text)
    assert d.chords == ((1, 5), (2, 6))
    assert d.label(5) == ClassLabel("Y", 2)
    again = loads(dumps(d))
    assert again == d
    assert canonical_key(again) == canonical_key(d)
    assert dumps(again) == dumps(d)


@settings(max_examples=40)
@given(diagrams())
def test_key_round_trips_through_json(d):
    assert canonical_key(from_json(json.loads(json.dumps(to_json(d))))) == canonical_key(d)


def test_bad_json_rejected():
    with pytest.raises(ValueError):
        from_json({"chords": []})
    with pytest.raises(ValueError):
        from_json({"num_vertices": 4, "chords": [[1, 2]], "classes": {"1": "Q1", "2": "X1"}})


def test_class_label_parsing():
    assert str(ClassLabel.parse("Z12")) == "Z12"
    assert ClassLabel.parse("P") == ClassLabel("P")
    with pytest.raises(ValueError):
        ClassLabel.parse("X0")


def test_dot_tree_has_leaf_per_multiset_element():
    d = build_crossing(3)
    dot = expansion_tree_dot(d)
    assert dot.startswith("digraph")
    assert dot.count("style=rounded") == 5
    assert dot.count("expand ") == 4


def test_cache_limit_does_not_change_results(monkeypatch):
    monkeypatch.setenv("CHORDEX_CACHE_BYTES", "2000")
    d = build_crossing(6)
    assert ex(d) == 272
    assert ncd(d).total() == 272
