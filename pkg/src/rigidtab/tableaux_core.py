"""Partitions, skew shapes and (reverse) standard Young tableaux.

Partitions are plain tuples of positive integers.  A skew shape is a pair
``(outer, inner)``.  A tableau stores its rows as tuples of entries for the
cells of ``outer / inner``, read left to right.
"""
import os
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, NamedTuple, Sequence

STANDARD = "standard"
REVERSE = "reverse"

DEFAULT_BOUND = 16


class BoundExceeded(ValueError):
    """Raised when an enumeration would exceed the configured size bound."""


def enumeration_bound() -> int:
    """Largest cell count an enumerator accepts (env ``MAXWEIGHT_BOUND`` overrides)."""
    raw = os.environ.get("MAXWEIGHT_BOUND")
    if raw is None:
        return DEFAULT_BOUND
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_BOUND


def check_bound(m: int, bound: int | None = None) -> None:
    limit = enumeration_bound() if bound is None else bound
    if m > limit:
        raise BoundExceeded(f"size {m} exceeds enumeration bound {limit}")


class Tableau(NamedTuple):
    outer: tuple
    inner: tuple
    rows: tuple
    orientation: str = STANDARD

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)


def normalize_partition(parts: Iterable[int]) -> tuple:
    """Drop zero parts; ``(0,)`` denotes the empty partition."""
    return tuple(p for p in parts if p != 0)


def is_partition(parts: Sequence[int]) -> bool:
    return all(p > 0 for p in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


def is_strict(parts: Sequence[int]) -> bool:
    return all(p > 0 for p in parts) and all(a > b for a, b in zip(parts, parts[1:]))


def staircase(m: int) -> tuple:
    """lambda(m) = (m, m-1, ..., 1); empty for m <= 0."""
    return tuple(range(m, 0, -1))


def merge_parts(lams: Iterable[Sequence[int]]) -> tuple:
    """Multiset union of the parts, sorted weakly decreasing."""
    out = []
    for lam in lams:
        out.extend(p for p in lam if p != 0)
    return tuple(sorted(out, reverse=True))


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """Young-diagram containment inner within outer."""
    if len(inner) > len(outer):
        return False
    return all(o >= i for o, i in zip(outer, inner))


def partitions(m: int, max_parts: int | None = None, max_part: int | None = None) -> Iterator[tuple]:
    """All partitions of m, in reverse lexicographic order."""
    def rec(rest, cap, slots):
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first, slots - 1):
                yield (first,) + tail
    top = m if max_part is None else max_part
    slots = m if max_parts is None else max_parts
    yield from rec(m, top, slots)


def strict_partitions(m: int, max_part: int | None = None) -> Iterator[tuple]:
    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first - 1):
                yield (first,) + tail
    yield from rec(m, m if max_part is None else max_part)


def hook_length_count(shape: Sequence[int]) -> int:
    shape = normalize_partition(shape)
    n = sum(shape)
    conj = [sum(1 for p in shape if p > j) for j in range(shape[0])] if shape else []
    prod = 1
    for i, row in enumerate(shape):
        for j in range(row):
            prod *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(n) // prod


@lru_cache(maxsize=None)
def _skew_count(outer: tuple, inner: tuple) -> int:
    if outer == inner:
        return 1
    total = 0
    for i in range(len(outer)):
        above = outer[i - 1] if i > 0 else None
        if inner[i] < outer[i] and (above is None or inner[i - 1] > inner[i]):
            nxt = inner[:i] + (inner[i] + 1,) + inner[i + 1:]
            total += _skew_count(outer, nxt)
    return total


def _pad(inner: Sequence[int], k: int) -> tuple:
    return tuple(inner) + (0,) * (k - len(inner))


def count_syt(outer: Sequence[int], inner: Sequence[int] = ()) -> int:
    """Number of standard fillings of outer / inner (hook lengths when inner is empty)."""
    outer = normalize_partition(outer)
    inner = normalize_partition(inner)
    if not is_partition(outer) or not contains(outer, inner):
        raise ValueError(f"invalid skew shape {outer}/{inner}")
    if not inner:
        return hook_length_count(outer)
    return _skew_count(outer, _pad(inner, len(outer)))


def skew_chains(outer: Sequence[int], inner: Sequence[int]) -> Iterator[tuple]:
    """Yield row indices in the order cells are added going from inner up to outer.

    Rows may be of length zero in ``outer``; the frame has ``len(outer)`` rows.
    """
    k = len(outer)
    start = _pad(inner, k)
    m = sum(outer) - sum(start)
    cur = list(start)
    path = []

    def rec():
        if len(path) == m:
            yield tuple(path)
            return
        for i in range(k):
            if cur[i] < outer[i] and (i == 0 or cur[i - 1] > cur[i]):
                cur[i] += 1
                path.append(i)
                yield from rec()
                path.pop()
                cur[i] -= 1
    yield from rec()


def reading_word(T: Tableau) -> tuple:
    return tuple(x for row in T.rows for x in row)


def enumerate_syt(outer: Sequence[int], inner: Sequence[int] = (), orientation: str = STANDARD,
                  bound: int | None = None) -> list:
    """All standard (or reverse-standard) fillings, sorted by row reading word."""
    outer = normalize_partition(outer)
    inner = normalize_partition(inner)
    if not is_partition(outer) or not contains(outer, inner):
        raise ValueError(f"invalid skew shape {outer}/{inner}")
    m = sum(outer) - sum(inner)
    check_bound(m, bound)
    k = len(outer)
    out = []
    for chain in skew_chains(outer, inner):
        rows = [[] for _ in range(k)]
        for step, i in enumerate(chain):
            rows[i].append(step + 1 if orientation == STANDARD else m - step)
        out.append(Tableau(outer, inner, tuple(tuple(r) for r in rows), orientation))
    out.sort(key=reading_word)
    return out


def flip(T: Tableau) -> Tableau:
    """Entry map i -> m+1-i, switching orientation."""
    m = T.size
    other = REVERSE if T.orientation == STANDARD else STANDARD
    return T._replace(rows=tuple(tuple(m + 1 - x for x in r) for r in T.rows), orientation=other)


def is_valid_tableau(T: Tableau) -> bool:
    """Entries 1..m, rows and columns monotone in the tableau's orientation."""
    m = T.size
    if sorted(reading_word(T)) != list(range(1, m + 1)):
        return False
    k = len(T.rows)
    inner = _pad(T.inner, k)
    outer = _pad(T.outer, k)
    if any(inner[i] > inner[i - 1] or outer[i] > outer[i - 1] for i in range(1, k)):
        return False
    lt = (lambda a, b: a < b) if T.orientation == STANDARD else (lambda a, b: a > b)
    grid = {}
    for i, row in enumerate(T.rows):
        if inner[i] + len(row) != outer[i]:
            return False
        for j, x in enumerate(row):
            grid[(i, inner[i] + j)] = x
    for (i, j), x in grid.items():
        if (i, j + 1) in grid and not lt(x, grid[(i, j + 1)]):
            return False
        if (i + 1, j) in grid and not lt(x, grid[(i + 1, j)]):
            return False
    return True


def restrict_gt(T: Tableau, s: int) -> Tableau:
    """Remove cells with entries <= s and subtract s from the rest (reverse orientation)."""
    if T.orientation != REVERSE:
        raise ValueError("restrict_gt expects a reverse-standard tableau")
    if not 0 <= s <= T.size:
        raise ValueError(f"s={s} outside 0..{T.size}")
    k = len(T.rows)
    inner = _pad(T.inner, k)
    rows = tuple(tuple(x - s for x in r if x > s) for r in T.rows)
    outer = normalize_partition(inner[i] + len(rows[i]) for i in range(k))
    return Tableau(outer, normalize_partition(T.inner), rows, REVERSE)


def row_contains(a: Sequence[int], b: Sequence[int]) -> bool:
    """a sits directly above b column by column in a reverse-standard tableau."""
    return len(a) >= len(b) and all(x > y for x, y in zip(a, b))


def skew_violation(lams: Sequence[Sequence[int]], s: int):
    """First failing row pair (i, i+1) of the skew-tableau conditions, or None."""
    k = len(lams)
    for i in range(k - 2):
        if not row_contains(lams[i], lams[i + 1]):
            return (i + 1, i + 2)
    if k >= 2 and not row_contains(lams[k - 2], lams[k - 1][s:]):
        return (k - 1, k)
    return None


def tableau_from_strict_sequence(lams: Sequence[Sequence[int]], s: int = 0) -> Tableau:
    """Reverse-standard skew tableau of shape mu / (s^(k-1)) whose row i holds lams[i]."""
    rows = tuple(normalize_partition(lam) for lam in lams)
    k = len(rows)
    for lam in rows:
        if not is_strict(lam):
            raise ValueError(f"row {lam} is not a strict partition")
    merged = merge_parts(rows)
    m = len(merged)
    if merged != staircase(m):
        raise ValueError(f"rows do not merge to a staircase: {merged}")
    bad = skew_violation(rows, s)
    if bad is not None:
        raise ValueError(f"column strictness fails between rows {bad[0]} and {bad[1]}")
    inner = tuple([s] * (k - 1)) if k >= 2 else ()
    outer = tuple(inner[i] + len(rows[i]) if i < k - 1 else len(rows[i]) for i in range(k))
    return Tableau(normalize_partition(outer), normalize_partition(inner), rows, REVERSE)


def strict_sequence(T: Tableau) -> tuple:
    """Inverse of tableau_from_strict_sequence: the rows as strict partitions."""
    if T.orientation != REVERSE:
        T = flip(T)
    return tuple(tuple(r) for r in T.rows)


def shift_of(T: Tableau) -> int:
    return T.inner[0] if T.inner else 0


def count_syt_rows(m: int, k: int, odd_rows: int | None = None) -> int:
    """SYTs with m cells and at most k rows, optionally with exactly odd_rows odd rows."""
    total = 0
    for lam in partitions(m, max_parts=k):
        if odd_rows is None or sum(p % 2 for p in lam) == odd_rows:
            total += hook_length_count(lam)
    return total


def conjugate(lam: Sequence[int]) -> tuple:
    lam = normalize_partition(lam)
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0])) if lam else ()
