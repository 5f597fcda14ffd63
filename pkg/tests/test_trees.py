import pytest

from chordex.chord import ex
from chordex.families import build_crossing
from chordex.sequences import euler
from chordex.trees import IncreasingTree, enumerate_even_trees, phi, phi_inv, staircase_fillings
from chordex.young import Filling


def test_small_orders():
    assert [t.parent for t in enumerate_even_trees(2)] == [(0,)]
    assert [t.parent for t in enumerate_even_trees(3)] == [(0, 0)]
    assert enumerate_even_trees(1) == [IncreasingTree(())]


def test_chain_excluded():
    chain = IncreasingTree((0, 1))
    assert not chain.is_even()
    assert chain not in enumerate_even_trees(3)


def test_enumeration_against_unpruned_search():
    from itertools import product

    for order in range(2, 8):
        raw = [IncreasingTree(p) for p in product(*(range(k) for k in range(1, order)))]
        assert enumerate_even_trees(order) == [t for t in raw if t.is_even()]


@pytest.mark.parametrize("order", range(2, 9))
def test_counts_are_euler(order):
    assert len(enumerate_even_trees(order)) == euler(order - 1)


def test_phi_example():
    f = phi(IncreasingTree((0, 1, 1)))
    assert f == Filling((2, 1), ((1, 1), (0,)))
    assert phi_inv(f) == IncreasingTree((0, 1, 1))


@pytest.mark.parametrize("order", range(3, 8))
def test_star_maps_to_zero(order):
    assert phi(IncreasingTree((0,) * (order - 1))) == Filling.zeros(tuple(range(order - 2, 0, -1)))


@pytest.mark.parametrize("order", range(3, 9))
def test_bijection(order):
    trees = enumerate_even_trees(order)
    images = [phi(t) for t in trees]
    for t, f in zip(trees, images):
        assert f.satisfies((0,) * (order - 2))
        assert phi_inv(f) == t
    assert set(images) == set(staircase_fillings(order - 2))
    assert len(set(images)) == len(trees)


@pytest.mark.parametrize("n", range(1, 7))
def test_count_chain(n):
    assert len(enumerate_even_trees(n + 2)) == len(staircase_fillings(n)) == ex(build_crossing(n)) == euler(n + 1)


def test_phi_inv_rejects_bad_fillings():
    with pytest.raises(ValueError):
        phi_inv(Filling((2, 1), ((1, 0), (0,))))  # odd row
    with pytest.raises(ValueError):
        phi_inv(Filling((3, 2, 1), ((1, 1, 0), (1, 1), (0,))))  # two ones in column 1
    with pytest.raises(ValueError):
        phi_inv(Filling((3, 1), ((0, 0, 0), (0,))))  # not a staircase


def test_tree_validation():
    with pytest.raises(ValueError):
        IncreasingTree((0, 2))
    with pytest.raises(ValueError):
        phi(IncreasingTree((0,)))
