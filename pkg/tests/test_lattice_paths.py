from itertools import product

import pytest
from hypothesis import given, strategies as st

from rigidtab.lattice_paths import (
    CLOSED, NUMBERS, IdentityFailure, catalan, catalan_number, enumerate_paths, height_profile, is_path_of_kind,
    iter_nr_domain, motzkin, nr_shift, nr_unshift, pascal, riordan, triangle, verify_identities,
)

# printed triangles, rows from the top s down to s = 0, each starting at m = s
PRINTED = {
    "motzkin": [[1], [1, 6], [1, 5, 20], [1, 4, 14, 44], [1, 3, 9, 25, 69], [1, 2, 5, 12, 30, 76],
                [1, 1, 2, 4, 9, 21, 51]],
    "riordan": [[1], [1, 6], [1, 5, 21], [1, 4, 15, 49], [1, 3, 10, 29, 84], [1, 2, 6, 15, 40, 105],
                [1, 1, 3, 6, 15, 36, 91], [1, 0, 1, 1, 3, 6, 15, 36]],
    "catalan": [[1], [1, 0], [1, 0, 6], [1, 0, 5, 0], [1, 0, 4, 0, 14], [1, 0, 3, 0, 9, 0],
                [1, 0, 2, 0, 5, 0, 14], [1, 0, 1, 0, 2, 0, 5, 0]],
    "pascal": [[1], [1, 0], [1, 0, 7], [1, 0, 6, 0], [1, 0, 5, 0, 21], [1, 0, 4, 0, 15, 0],
               [1, 0, 3, 0, 10, 0, 35], [1, 0, 2, 0, 6, 0, 20, 0]],
}
PATH_KIND = {"motzkin": "motzkin", "riordan": "riordan", "catalan": "dyck", "pascal": "pascal"}


def brute_paths(kind, m, s):
    steps = "DU" if kind in ("dyck", "pascal") else "DHU"
    out = []
    for w in product(steps, repeat=m):
        w = "".join(w)
        if height_profile(w)[-1] == s and is_path_of_kind(w, kind):
            out.append(w)
    return out


@pytest.mark.parametrize("kind", sorted(PRINTED))
def test_printed_triangles(kind):
    rows = PRINTED[kind]
    top = len(rows) - 1
    for i, row in enumerate(rows):
        s = top - i
        assert [NUMBERS[kind](m, s) for m in range(s, s + len(row))] == row


@pytest.mark.parametrize("kind", sorted(NUMBERS))
def test_recursion_matches_closed_form(kind):
    for m in range(25):
        for s in range(m + 1):
            assert NUMBERS[kind](m, s) == CLOSED[kind](m, s)


@pytest.mark.parametrize("kind", sorted(NUMBERS))
def test_counts_match_brute_force(kind):
    pk = PATH_KIND[kind]
    for m in range(9):
        for s in range(m + 1):
            paths = brute_paths(pk, m, s)
            assert len(paths) == NUMBERS[kind](m, s)
            assert enumerate_paths(pk, m, s) == sorted(paths)


def test_known_sequences():
    assert [motzkin(m) for m in range(10)] == [1, 1, 2, 4, 9, 21, 51, 127, 323, 835]
    assert [riordan(m) for m in range(10)] == [1, 0, 1, 1, 3, 6, 15, 36, 91, 232]
    assert [catalan(2 * n) for n in range(8)] == [catalan_number(n) for n in range(8)]
    assert pascal(6, 0) == 20 and pascal(5, -1) == 0


def test_triangle_dict():
    t = triangle("motzkin", 4)
    assert t[(3, 1)] == 5 and len(t) == 10


def test_identities_report():
    report = verify_identities(12)
    assert len(report) == 5 and all("12" in rng for _, rng in report)
    assert issubclass(IdentityFailure, AssertionError)


@pytest.mark.parametrize("m", range(1, 10))
def test_nr_bijection(m):
    for s in range(m + 1):
        dom = list(iter_nr_domain(m, s))
        img = [nr_shift(p) for p in dom]
        assert len(set(img)) == len(dom)
        target = set(enumerate_paths("riordan", m, s + 1))
        assert set(img) == target
        assert all(nr_unshift(q) == p for p, q in zip(dom, img))
        assert len(dom) == motzkin(m, s) - riordan(m, s)


@given(st.integers(min_value=1, max_value=10), st.data())
def test_nr_round_trip_random(m, data):
    s = data.draw(st.integers(min_value=0, max_value=m - 1))
    dom = list(iter_nr_domain(m, s))
    if dom:
        p = data.draw(st.sampled_from(dom))
        assert nr_unshift(nr_shift(p)) == p


def test_nr_errors():
    with pytest.raises(ValueError):
        nr_shift("UD")
    with pytest.raises(ValueError):
        nr_shift("DU")
    with pytest.raises(ValueError):
        nr_unshift("UD")
    with pytest.raises(ValueError):
        enumerate_paths("schroeder", 2, 0)
