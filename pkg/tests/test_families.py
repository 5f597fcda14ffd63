import pytest

from chordex.chord import ChordDiagram, crossings, ex, expand_step, ncd
from chordex.families import (
    build_E,
    build_Enk,
    build_bipartite_crossing,
    build_crossing,
    e_count,
    enk_alternative,
    f_count,
    f_distribution,
    f_fast,
    join_pair,
)
from chordex.intersection import intersection_graph
from chordex.young import cor6_rhs, eps_vectors, g_distribution, strict_shapes


def named_chords(d):
    """Chords as sets of class-label strings, e.g. {"X1", "Y5"}."""
    labels = d.classes
    return {frozenset(str(labels[v]) for v in c) for c in d.chords}


def test_figure_two_diagram():
    d = build_E((5, 3, 2), (0, 1, 0))
    expected = [{"X1", "Y5"}, {"X2", "Z3"}, {"X3", "Y2"}, {"Y1", "Z1"}, {"Y4", "Z4"}]
    assert named_chords(d) == {frozenset(c) for c in expected}
    assert d.num_vertices == 3 + 2 * 5
    used = {v for c in d.chords for v in c}
    assert len(used) == 10  # three isolated vertices remain


def test_vertex_layout_is_anticlockwise_x_z_reversed_y():
    d = build_E((3, 1), (0, 1))
    order = [str(d.label(v)) for v in range(1, d.num_vertices + 1)]
    assert order == ["X1", "X2", "Z1", "Z2", "Z3", "Y3", "Y2", "Y1"]


def test_chord_set_formula_general():
    for s in strict_shapes(5):
        for e in eps_vectors(len(s)):
            d = build_E(s, e)
            expected = set()
            for i, (a, b) in enumerate(zip(s, e), start=1):
                expected.add(frozenset({f"X{i}", f"{'Z' if b else 'Y'}{a}"}))
            for j in range(1, s.width + 1):
                if j not in s.rows:
                    expected.add(frozenset({f"Y{j}", f"Z{j}"}))
            assert named_chords(d) == expected
            assert len(d.chords) == s.width


@pytest.mark.parametrize("n", range(1, 7))
def test_staircase_all_zero_is_n_crossing(n):
    d = build_crossing(n)
    assert len(crossings(d)) == n * (n - 1) // 2


@pytest.mark.parametrize("m,n", [(1, 1), (2, 3), (3, 2), (3, 3)])
def test_bipartite_family(m, n):
    d = build_bipartite_crossing(m, n)
    g = intersection_graph(d)
    assert len(g.edges) == m * n
    degrees = sorted(sum(v in e for e in g.edges) for v in range(1, m + n + 1))
    assert degrees == sorted([n] * m + [m] * n)


@pytest.mark.parametrize("n", range(1, 6))
def test_enk_structure(n):
    for k in range(n + 1):
        g = intersection_graph(build_Enk(n, k))
        degrees = sorted(sum(v in e for e in g.edges) for v in range(1, n + 2))
        # n chords pairwise crossing, plus one chord crossing k of them.
        expected = sorted([n - 1] * (n - k) + [n] * k + [k])
        assert degrees == expected


def test_builders_reject_bad_parameters():
    with pytest.raises(ValueError):
        build_crossing(0)
    with pytest.raises(ValueError):
        build_Enk(2, 3)
    with pytest.raises(ValueError):
        build_E((2, 1), (0,))


def test_crossing_two_expansion_number():
    assert ex(build_crossing(2)) == 2


@pytest.mark.parametrize("n", range(1, 6))
def test_enk_zero_matches_crossing(n):
    assert ex(build_Enk(n, 0)) == ex(build_crossing(n))


def test_e_count_examples():
    c2 = build_E((2, 1), (0, 0))
    e1, e2 = expand_step(c2, crossings(c2)[0])
    assert named_chords(e1) == {frozenset({"X1", "X2"}), frozenset({"Y2", "Y1"})}
    assert e_count(e1, "Y") == 1 and e_count(e1, "XZ") == 1
    assert e_count(e2, "Y") == 0 and e_count(e2, "XZ") == 0
    single = build_E((1,), (1,))
    assert e_count(single, "XZ") == 1 and e_count(single, "Y") == 0


def test_e_count_needs_labels():
    with pytest.raises(ValueError):
        e_count(ChordDiagram(4, [(1, 2)]), "Y")
    with pytest.raises(ValueError):
        e_count(build_crossing(2), "X")


def test_leaves_inherit_labels():
    d = build_E((4, 2), (1, 0))
    for leaf, _ in ncd(d).items():
        assert leaf.classes == d.classes


@pytest.mark.parametrize("eps", [0, 1])
def test_one_row_base(eps):
    assert [f_count((1,), (eps,), k) for k in range(2)] == [int(k == eps) for k in range(2)]
    assert [f_fast((1,), (eps,), k) for k in range(2)] == [int(k == eps) for k in range(2)]


def test_c2_refined_counts():
    assert [f_count((2, 1), (0, 0), k) for k in range(3)] == [1, 0, 1]
    assert [f_fast((2, 1), (0, 0), k) for k in range(3)] == [1, 0, 1]


def test_k_out_of_range_is_zero():
    assert f_count((2, 1), (0, 0), -1) == 0
    assert f_count((2, 1), (0, 0), 3) == 0
    assert f_fast((2, 1), (0, 0), 7) == 0


@pytest.mark.parametrize("s", list(strict_shapes(6)), ids=str)
def test_theorem_one_and_recurrence(s):
    for e in eps_vectors(len(s)):
        f = f_distribution(s, e)
        assert sum(f) == ex(build_E(s, e))
        assert f == g_distribution(s, e)
        assert f == [f_fast(s, e, k) for k in range(s.width + 1)]


@pytest.mark.parametrize("s", list(strict_shapes(6)), ids=str)
def test_corollary_six(s):
    assert sum(ex(build_E(s, e)) for e in eps_vectors(len(s))) == cor6_rhs(s)


@pytest.mark.parametrize("m,n", [(m, t - m) for t in range(2, 8) for m in range(1, t)])
def test_join_realizations_agree(m, n):
    first, second = join_pair(m, n)
    assert ex(first) == ex(second)
    assert len(intersection_graph(first).edges) == len(intersection_graph(second).edges)


@pytest.mark.parametrize("n", range(1, 6))
def test_enk_realizations_agree(n):
    for k in range(n + 1):
        assert ex(enk_alternative(n, k)) == ex(build_Enk(n, k))
