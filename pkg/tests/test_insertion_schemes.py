import pytest
from hypothesis import given, strategies as st

from rigidtab.insertion_schemes import (
    classify_level3, insert_box, jdt_condition, partition_level3, reverse_rigid_jdt, rigid_jdt,
    tableau_to_motzkin, tableau_to_pascal_path,
)
from rigidtab.lattice_paths import enumerate_paths, motzkin
from rigidtab.rigid_tableaux import RigidIndex, count_sB, enumerate_sB, is_rigid
from rigidtab.tableaux_core import shift_of, tableau_from_strict_sequence

T_PRIME = ((12, 10, 8, 7), (11, 9, 1), (6, 5, 4, 3, 2))


def test_insert_box_example():
    assert insert_box(((7, 5, 4, 2), (6, 3, 1)), 1, 8) == ((8, 7, 5, 4, 2), (6, 3, 1))
    assert insert_box((), 2, 1) == ((), (1,))
    with pytest.raises(ValueError):
        insert_box(((2, 1),), 1, 2)
    with pytest.raises(ValueError):
        insert_box(((2, 1),), 3, 5)


def test_rigid_jdt_examples():
    T = rigid_jdt(tableau_from_strict_sequence(T_PRIME, 3), 13)
    assert T.rows == ((13, 12, 10, 7), (11, 9, 8, 1), (6, 5, 4, 3, 2)) and shift_of(T) == 2
    R = reverse_rigid_jdt(tableau_from_strict_sequence(((13, 12, 10, 7, 5), (11, 9, 8, 1), (6, 4, 3, 2)), 1))
    assert R.rows == ((12, 10, 8, 7, 5), (11, 9, 1), (6, 4, 3, 2)) and shift_of(R) == 2
    T = rigid_jdt(tableau_from_strict_sequence(((), (), (1,)), 1), 2)
    assert T.rows == ((2,), (1,), ())


def test_motzkin_word_example():
    assert tableau_to_motzkin(tableau_from_strict_sequence(T_PRIME, 3)) == "UUUUUUDHHDHD"


def test_pascal_word_example():
    assert tableau_to_pascal_path(tableau_from_strict_sequence(((6, 5, 3, 2), (8, 7, 4, 1)), 2)) == "UDDDUUUU"


def test_partition_examples():
    assert [len(p) for p in partition_level3(4, 1)] == [5, 4, 3]
    assert [len(p) for p in partition_level3(6, 0)] == [21, 0, 30]
    with pytest.raises(ValueError):
        partition_level3(0, 0)


@pytest.mark.parametrize("m", range(1, 9))
def test_partition_sizes(m):
    for s in range(m + 1):
        h, u, d = partition_level3(m, s)
        assert (len(h), len(u), len(d)) == (count_sB(m - 1, s, 3), count_sB(m - 1, s - 1, 3),
                                            count_sB(m - 1, s + 1, 3))
        assert len(h) + len(u) + len(d) == motzkin(m, s)


@pytest.mark.parametrize("m", range(1, 9))
def test_jdt_round_trip(m):
    for s in range(m):
        images = set()
        for Tp in enumerate_sB(RigidIndex(m - 1, s + 1, 3)):
            T = rigid_jdt(Tp, m)
            assert shift_of(T) == s and is_rigid(T.rows, RigidIndex(m, s, 3))
            assert jdt_condition(T.rows, s, m)
            assert classify_level3(T.rows, s)[0] == "D"
            back = reverse_rigid_jdt(T)
            assert back.rows == Tp.rows and shift_of(back) == s + 1
            images.add(T.rows)
        assert len(images) == count_sB(m - 1, s + 1, 3)


@pytest.mark.parametrize("m", range(0, 9))
def test_motzkin_bijection(m):
    for s in range(m + 1):
        words = [tableau_to_motzkin(T) for T in enumerate_sB(RigidIndex(m, s, 3))]
        assert sorted(words) == enumerate_paths("motzkin", m, s)


@pytest.mark.parametrize("m", range(0, 11))
def test_pascal_bijection(m):
    for s in range(m + 1):
        words = [tableau_to_pascal_path(T) for T in enumerate_sB(RigidIndex(m, s, 2))]
        assert sorted(words) == enumerate_paths("pascal", m, s + (m - s) % 2)


@given(st.integers(min_value=1, max_value=8), st.data())
def test_reverse_rejects_insertions(m, data):
    s = data.draw(st.integers(min_value=0, max_value=m))
    tabs = enumerate_sB(RigidIndex(m, s, 3))
    T = data.draw(st.sampled_from(tabs))
    kind = classify_level3(T.rows, s)[0]
    if kind == "D":
        assert rigid_jdt(reverse_rigid_jdt(T), m).rows == T.rows
    else:
        with pytest.raises(ValueError):
            reverse_rigid_jdt(T)


def test_input_errors():
    with pytest.raises(ValueError):
        rigid_jdt(tableau_from_strict_sequence(((2,), (1,), ()), 0), 3)
    with pytest.raises(ValueError):
        tableau_to_motzkin(((2, 1),), 0)
