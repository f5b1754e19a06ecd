"""Rigid, spin rigid, almost-even and parity tableaux.

A skew tableau of shape mu / (s^(k-1)) with m cells is handled as a sequence
``lams`` of k strict partitions (the rows of a reverse-standard filling).
Empty rows are written as ``()``.
"""
from typing import Iterator, NamedTuple, Sequence

from .tableaux_core import (
    REVERSE, Tableau, check_bound, normalize_partition, reading_word, row_contains,
    tableau_from_strict_sequence,
)


class RigidIndex(NamedTuple):
    m: int
    s: int
    k: int


def _as_rows(lams) -> tuple:
    return tuple(normalize_partition(lam) for lam in lams)


def _check_input(lams, idx: RigidIndex) -> tuple:
    rows = _as_rows(lams)
    if len(rows) != idx.k:
        raise ValueError(f"expected {idx.k} rows, got {len(rows)}")
    T = tableau_from_strict_sequence(rows, idx.s)
    if T.size != idx.m:
        raise ValueError(f"expected {idx.m} cells, got {T.size}")
    return rows


def shifted_sequences(m: int, s: int, k: int) -> Iterator[tuple]:
    """All valid strict sequences of k rows with m cells and shift s (unfiltered)."""
    inner = [s] * (k - 1) + [0] if k >= 1 else []
    rows = [[] for _ in range(k)]

    def rec(x):
        if x == 0:
            yield tuple(tuple(r) for r in rows)
            return
        for i in range(k):
            col = inner[i] + len(rows[i])
            if i > 0 and inner[i - 1] + len(rows[i - 1]) <= col:
                continue
            rows[i].append(x)
            yield from rec(x - 1)
            rows[i].pop()
    if k >= 1:
        yield from rec(m)


def is_rigid(lams: Sequence[Sequence[int]], idx: RigidIndex) -> bool:
    """Membership in sB_m^(k): s = 0, or the last row shifted right by one breaks columns."""
    rows = _check_input(lams, idx)
    s, k = idx.s, idx.k
    if s == 0:
        return True
    if k < 2 or s > idx.m:
        return False
    return not row_contains(rows[k - 2], rows[k - 1][s - 1:])


def is_almost_even(c: Sequence[int]) -> bool:
    """Exactly one odd part for an odd total, exactly two for an even total."""
    odd = sum(1 for x in c if x % 2)
    return odd == 1 if sum(c) % 2 else odd == 2


def is_spin_rigid(lams: Sequence[Sequence[int]], idx: RigidIndex) -> bool:
    """Membership in sD_m^(k): almost-even shifted row lengths, shift-by-two failure when s >= 2."""
    rows = _check_input(lams, idx)
    m, s, k = idx
    if m < s - 1:
        return False
    if k < 2 and s > 0:
        return False
    lengths = [len(r) for r in rows]
    lengths[-1] += s
    if not is_almost_even(lengths):
        return False
    if s >= 2:
        return not row_contains(rows[k - 2], rows[k - 1][s - 2:])
    return True


def _to_tableau(rows: tuple, s: int) -> Tableau:
    return tableau_from_strict_sequence(rows, s)


def _collect(idx: RigidIndex, pred, bound) -> list:
    check_bound(idx.m, bound)
    out = [_to_tableau(rows, idx.s) for rows in shifted_sequences(idx.m, idx.s, idx.k)
           if pred(rows, idx)]
    out.sort(key=reading_word)
    return out


def _rigid_fast(rows, idx):
    s, k = idx.s, idx.k
    if s == 0:
        return True
    return k >= 2 and not row_contains(rows[k - 2], rows[k - 1][s - 1:])


def _spin_fast(rows, idx):
    m, s, k = idx
    if k < 2 and s > 0:
        return False
    lengths = [len(r) for r in rows]
    lengths[-1] += s
    if not is_almost_even(lengths):
        return False
    return s < 2 or not row_contains(rows[k - 2], rows[k - 1][s - 2:])


def enumerate_sB(idx: RigidIndex, bound: int | None = None) -> list:
    """All rigid tableaux of index (m, s) with k rows, sorted by reading word."""
    m, s, k = idx
    if m < 0 or s < 0 or k < 1 or s > m:
        return []
    return _collect(idx, _rigid_fast, bound)


def enumerate_sD(idx: RigidIndex, bound: int | None = None) -> list:
    """All spin rigid tableaux of index (m, s) with k rows."""
    m, s, k = idx
    if m < 0 or s < 0 or k < 1 or s > m + 1:
        return []
    return _collect(idx, _spin_fast, bound)


def count_sB(m: int, s: int, k: int) -> int:
    if m < 0 or s < 0 or k < 1 or s > m:
        return 0
    check_bound(m)
    idx = RigidIndex(m, s, k)
    return sum(1 for rows in shifted_sequences(m, s, k) if _rigid_fast(rows, idx))


def count_sD(m: int, s: int, k: int) -> int:
    if m < 0 or s < 0 or k < 1 or s > m + 1:
        return 0
    check_bound(m)
    idx = RigidIndex(m, s, k)
    return sum(1 for rows in shifted_sequences(m, s, k) if _spin_fast(rows, idx))


def enumerate_parity(eps: int, m: int, k: int, bound: int | None = None) -> list:
    """Straight tableaux with at most k rows whose k row lengths (zeros included) are all = eps mod 2."""
    if eps not in (0, 1):
        raise ValueError("eps must be 0 or 1")
    idx = RigidIndex(m, 0, k)
    return _collect(idx, lambda rows, _: all(len(r) % 2 == eps for r in rows), bound)


def enumerate_almost_even(m: int, k: int, bound: int | None = None) -> list:
    """The almost-even tableaux D_m^(k), which coincide with 0D_m^(k)."""
    return enumerate_sD(RigidIndex(m, 0, k), bound)


def psi(T: Tableau) -> Tableau:
    """Move the cell holding 1 to the end of the other row (two-row straight tableaux)."""
    rows = [list(r) for r in T.rows]
    if len(rows) != 2 or T.inner:
        raise ValueError("psi acts on two-row straight tableaux")
    src = 0 if rows[0] and rows[0][-1] == 1 else 1
    if not rows[src] or rows[src][-1] != 1:
        raise ValueError("cell 1 must end a row")
    rows[src].pop()
    rows[1 - src].append(1)
    return tableau_from_strict_sequence(rows, 0)


def strip_head(T: Tableau) -> Tableau:
    """Remove the cell at position (1,1) holding the maximal entry."""
    if T.orientation != REVERSE:
        raise ValueError("strip_head expects a reverse-standard tableau")
    m = T.size
    inner0 = T.inner[0] if T.inner else 0
    if m == 0 or not T.rows[0] or T.rows[0][0] != m or inner0 != 0:
        raise ValueError("cell not removable: maximal entry is not at (1,1)")
    rows = (T.rows[0][1:],) + tuple(T.rows[1:])
    inner = (1,) + tuple(T.inner[1:])
    outer = normalize_partition(T.outer)
    if m == 1 and len(rows) == 1:
        return Tableau((), (), ((),), REVERSE)
    return Tableau(outer, normalize_partition(inner), rows, REVERSE)
