from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from conftest import partitions_st, strict_splits
from rigidtab.tableaux_core import (
    REVERSE, BoundExceeded, Tableau, count_syt, enumerate_syt, flip, is_valid_tableau, merge_parts, partitions,
    restrict_gt, staircase, strict_sequence, tableau_from_strict_sequence,
)


def brute_syt(outer, inner=()):
    """Standard fillings of outer/inner by trying every permutation."""
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    cells = [(i, j) for i in range(len(outer)) for j in range(inner[i], outer[i])]
    count = 0
    for perm in permutations(range(1, len(cells) + 1)):
        grid = dict(zip(cells, perm))
        if all(grid[(i, j)] < grid.get((i, j + 1), 10 ** 9) and grid[(i, j)] < grid.get((i + 1, j), 10 ** 9)
               for i, j in cells):
            count += 1
    return count


def test_staircase():
    assert staircase(3) == (3, 2, 1)
    assert staircase(0) == ()
    assert staircase(-1) == ()


def test_merge_parts_examples():
    assert merge_parts(((7, 3, 1), (8, 6, 6, 3), (7, 5, 4, 1))) == (8, 7, 7, 6, 6, 5, 4, 3, 3, 1, 1)
    assert merge_parts(((), (5,))) == (5,)
    assert merge_parts(((2, 1), (2,))) == (2, 2, 1)


@given(st.lists(partitions_st(6), max_size=4), st.randoms())
def test_merge_parts_is_multiset_union(lams, rnd):
    shuffled = list(lams)
    rnd.shuffle(shuffled)
    assert merge_parts(lams) == merge_parts(shuffled)
    if len(lams) >= 2:
        assert merge_parts((merge_parts(lams[:1]), merge_parts(lams[1:]))) == merge_parts(lams)


def test_count_syt_examples():
    assert count_syt((2, 2, 1)) == 5
    assert count_syt((1,)) == 1
    assert count_syt((4, 3, 1)) == 70


def test_skew_count_against_permutations():
    # the brute-force count of (2,2)/(1) is 2; see the decisions ledger
    assert count_syt((2, 2), (1,)) == brute_syt((2, 2), (1,)) == 2
    for outer, inner in [((3, 2), (1,)), ((3, 3, 1), (2, 1)), ((4, 2), (2,)), ((2, 2, 2), (1, 1))]:
        assert count_syt(outer, inner) == brute_syt(outer, inner)


def test_enumerate_examples():
    assert len(enumerate_syt((2, 1))) == 2
    assert len(enumerate_syt((1, 1, 1))) == 1
    assert len(enumerate_syt((2, 2), (1,))) == 2


def test_enumerate_bound():
    with pytest.raises(BoundExceeded):
        enumerate_syt((9, 9), bound=16)


@pytest.mark.parametrize("m", range(10))
def test_hook_length_matches_enumeration(m):
    for lam in partitions(m):
        tabs = enumerate_syt(lam)
        assert len(tabs) == count_syt(lam)
        assert all(is_valid_tableau(T) for T in tabs)
        words = [tuple(x for r in T.rows for x in r) for T in tabs]
        assert words == sorted(words)


def test_restrict_gt_example():
    T = Tableau((4, 3, 1), (), ((8, 6, 4, 3), (7, 2, 1), (5,)), REVERSE)
    assert restrict_gt(T, 1).rows == ((7, 5, 3, 2), (6, 1), (4,))
    assert restrict_gt(T, 0) == T
    assert restrict_gt(T, 8).size == 0


@given(partitions_st(7), st.data())
def test_restrict_gt_property(lam, data):
    tabs = [flip(T) for T in enumerate_syt(lam)]
    if not tabs:
        return
    T = data.draw(st.sampled_from(tabs))
    s = data.draw(st.integers(min_value=0, max_value=T.size))
    R = restrict_gt(T, s)
    assert R.size == T.size - s
    assert sorted(x for r in R.rows for x in r) == list(range(1, T.size - s + 1))
    for r in R.rows:
        assert list(r) == sorted(r, reverse=True)


def test_from_strict_sequence_examples():
    T = tableau_from_strict_sequence(((7, 5, 4), (3, 1), (6, 2)), 1)
    assert T.outer == (4, 3, 2) and T.inner == (1, 1)
    T = tableau_from_strict_sequence(((3, 2, 1),), 0)
    assert T.rows == ((3, 2, 1),) and T.inner == ()
    T = tableau_from_strict_sequence(((), (2, 1)), 2)
    assert T.outer == (2, 2) and T.inner == (2,)


def test_from_strict_sequence_reports_rows():
    with pytest.raises(ValueError, match="rows 1 and 2"):
        tableau_from_strict_sequence(((2,), (3, 1)), 0)
    with pytest.raises(ValueError, match="staircase"):
        tableau_from_strict_sequence(((3,), (1,)), 0)


@given(strict_splits(max_m=8))
def test_strict_sequence_round_trip(rows):
    try:
        T = tableau_from_strict_sequence(rows, 0)
    except ValueError:
        return
    assert strict_sequence(T) == rows
    assert tableau_from_strict_sequence(strict_sequence(T), 0) == T
