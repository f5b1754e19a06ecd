from itertools import product

import pytest
from hypothesis import given, strategies as st

import rigidtab.lie_oracle as lo
from rigidtab.rigid_tableaux import count_sB, count_sD


def affine_matrix(n):
    """B_n^(1), a_ij = <h_i, alpha_j>, built by hand: 0 - 2, 1 - 2 - ... - n with alpha_n short."""
    A = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        A[i][i] = 2
    for i, j in [(0, 2)] + [(i, i + 1) for i in range(1, n - 1)]:
        A[i][j] = A[j][i] = -1
    A[n - 1][n] = -1
    A[n][n - 1] = -2
    return A


def brute_maximal(n, lam, box):
    """Dominant lam - sum k_i alpha_i (k in a box) with lam - ... + delta not below lam."""
    A = affine_matrix(n)
    dcont = (1, 1) + (2,) * (n - 1)
    out = set()
    for k in product(range(box + 1), repeat=n + 1):
        labels = tuple(lam.labels[i] - sum(A[i][j] * k[j] for j in range(n + 1)) for i in range(n + 1))
        if min(labels) < 0:
            continue
        if all(a >= b for a, b in zip(k, dcont)):
            continue
        out.add(lo.AffineWeight(labels, lam.delta - k[0]))
    return out


def dominant_labels(n, k):
    colevel = (1, 1) + (2,) * (n - 2) + (1,)
    for labels in product(range(k + 1), repeat=n + 1):
        if sum(a * x for a, x in zip(colevel, labels)) == k:
            yield lo.AffineWeight(labels, 0)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_affine_against_brute_force(k):
    n = 3
    for lam in dominant_labels(n, k):
        got = {w.weight for w in lo.affine_kac_enumerate(n, lam, k)}
        assert got == brute_maximal(n, lam, 3 * k + 2), lam


@pytest.mark.parametrize("n", [3, 4, 5])
def test_contents_are_consistent(n):
    for _, lam in lo.level2_family(n):
        for w in lo.affine_kac_enumerate(n, lam, 2):
            assert lo.subtract_content(n, lam, w.content) == w.weight
            assert lo.affine_content(n, lam, w.weight) == w.content
            assert min(w.content) >= 0


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_level_counts(n):
    assert all(c.ok for c in lo.level2_counts(n))
    if n <= 5:
        assert all(c.ok for c in lo.level3_counts(n))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_lemma_union(n):
    for i, lam in lo.level2_family(n):
        got = {w.weight for w in lo.affine_kac_enumerate(n, lam, 2)}
        assert got == lo.lemma_weights(n, i)


def test_lemma_printed_range_misses_a_weight():
    n = 4
    printed = set(lo.lemma_ht_weights(n, 0, as_printed=True))
    fixed = set(lo.lemma_ht_weights(n, 0))
    assert fixed - printed == {lo.shift(lo.level2_weight(n, 1), 1)}


def test_affine_errors():
    with pytest.raises(ValueError):
        lo.affine_kac_enumerate(2, lo.fundamental(2, 0), 1)
    with pytest.raises(ValueError):
        lo.affine_kac_enumerate(3, lo.fundamental(3, 0), 2)
    with pytest.raises(ValueError):
        lo.affine_kac_enumerate(3, lo.fundamental(3, 0, 5), 5)
    assert lo.affine_content(3, lo.fundamental(3, 0), lo.fundamental(3, 3)) is None


def test_rank_nine_example():
    eta = lo.shift(lo.level2_weight(9, 7), 2)
    assert lo.staircase_index(eta, lo.level2_weight(9, 3)) == lo.StaircaseIndex(6, 2, 0, "plain")


@pytest.mark.parametrize("n", [3, 4, 5])
def test_level2_decoding(n):
    undecoded = []
    for i, lam in lo.level2_family(n):
        for w in lo.affine_kac_enumerate(n, lam, 2):
            idx = lo.staircase_index(w.weight, lam)
            if idx is None:
                undecoded.append(w.weight)
            else:
                # 2 Lambda_0 uses the tail lambda(-1)
                assert (-1 if i == 0 else 0) <= idx.s <= idx.m <= n
    assert set(undecoded) == {lo.shift(lo.fundamental(n, 1, 2), 2)}


# frozen; the rest are weights listed without a wall form
@pytest.mark.parametrize("n,decoded", [(3, 35), (4, 58)])
def test_level3_decoding(n, decoded):
    total = found = 0
    for c in lo.level3_counts(n):
        for w in lo.affine_kac_enumerate(n, c.lam, 3):
            total += 1
            found += lo.staircase_index(w.weight, c.lam) is not None
    assert total == n * 2 * (n + 1) + n * (n + 2)
    assert found == decoded


def test_conjecture_report():
    for n in (3, 4):
        for ell in (2, 3, 4):
            assert all(line.agrees for line in lo.check_conjecture(n, ell))
    with pytest.raises(ValueError):
        lo.check_conjecture(6, 2)


# finite types

@pytest.mark.parametrize("family,n", [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("D", 4)])
def test_weyl_dimension_equals_weight_sum(family, n):
    C = lo.cartan(family, n)
    for lam in product(range(2), repeat=n):
        total = sum(lo.freudenthal(C, lam, mu) * len(lo.orbit(C, mu)) for mu in lo.dominant_weights(C, lam))
        assert total == lo.weyl_dimension(C, lam)


def test_known_representations():
    C = lo.cartan("B", 3)
    assert lo.weyl_dimension(C, (0, 0, 1)) == 8
    assert lo.weyl_dimension(C, (1, 0, 0)) == 7
    assert lo.freudenthal(C, (0, 1, 0), (0, 0, 0)) == 3
    D = lo.cartan("D", 4)
    assert [lo.weyl_dimension(D, lo.omega(4, t)) for t in (1, 3, 4)] == [8, 8, 8]
    with pytest.raises(ValueError):
        lo.cartan("B", 9)


@given(st.sampled_from(["A", "B", "C", "D"]), st.integers(min_value=0, max_value=2), st.data())
def test_reflection_and_dominance(family, extra, data):
    n = 4
    C = lo.cartan(family, n)
    mu = tuple(data.draw(st.integers(min_value=-3, max_value=3)) for _ in range(n))
    i = data.draw(st.integers(min_value=0, max_value=n - 1))
    assert lo.reflect(C, lo.reflect(C, mu, i), i) == mu
    d = lo.to_dominant(C, mu)
    assert lo.is_dominant(d) and d in lo.orbit(C, mu)


@pytest.mark.parametrize("family", ["B", "D"])
def test_level2_binomial(family):
    for n in range(3, 7):
        for s in range(n + 1):
            for k in range(s + 1):
                C = lo.cartan(family, n)
                lam, mu = lo.tilde_omega(family, n, s), lo.tilde_omega(family, n, k)
                f = lo.freudenthal(C, lam, mu) if lo.below(C, lam, mu) is not None else 0
                assert f == lo.level2_binomial(family, n, s, k), (n, s, k)


@pytest.mark.parametrize("n", [3, 4])
@pytest.mark.parametrize("k", [2, 3])
def test_rigid_multiplicities(n, k):
    for m in range(n + 1):
        for s in range(m + 1):
            r = lo.verify_theorem_7x(n, k, s, m)
            assert r.freudenthal == count_sB(m, s, k)


@pytest.mark.parametrize("n", [3, 4])
@pytest.mark.parametrize("k", [2, 3])
def test_spin_multiplicities(n, k):
    for s in range(n + 1):
        for m in range(max(s - 1, 0), n):
            if k == 2 and (m - s) % 2 == 0:
                with pytest.raises(ValueError):
                    lo.verify_theorem_7x(n, k, s, m, family="D")
                continue
            r = lo.verify_theorem_7x(n, k, s, m, family="D")
            assert r.freudenthal == count_sD(m, s, k)


def test_theorem_domain():
    with pytest.raises(ValueError):
        lo.verify_theorem_7x(3, 2, 0, 4)
    with pytest.raises(ValueError):
        lo.verify_theorem_7x(3, 1, 0, 1)
