"""Robinson-Schensted row insertion, non-nesting involutions and the counts they explain.

Permutations are tuples of images ``(pi(1), ..., pi(n))``.
"""
from bisect import bisect_left, bisect_right
from itertools import permutations
from math import comb, prod
from typing import Iterator, NamedTuple, Sequence

from .tableaux_core import (
    STANDARD, Tableau, check_bound, conjugate, count_syt, hook_length_count, partitions,
)


def _as_tableau(rows) -> Tableau:
    rows = tuple(tuple(r) for r in rows if r)
    outer = tuple(len(r) for r in rows)
    return Tableau(outer, (), rows, STANDARD)


def row_insert(rows: list, x: int) -> int:
    """Insert x into rows in place; return the index of the row that grew."""
    for i, row in enumerate(rows):
        j = bisect_right(row, x)
        if j == len(row):
            row.append(x)
            return i
        row[j], x = x, row[j]
    rows.append([x])
    return len(rows) - 1


def rs(pi: Sequence[int]) -> tuple:
    """(P, Q): insertion and recording tableaux."""
    P, Q = [], []
    for step, x in enumerate(pi, 1):
        i = row_insert(P, x)
        if i == len(Q):
            Q.append([])
        Q[i].append(step)
    return _as_tableau(P), _as_tableau(Q)


def rs_inverse(P: Tableau, Q: Tableau) -> tuple:
    """Recover the permutation from an (insertion, recording) pair."""
    if P.outer != Q.outer:
        raise ValueError("P and Q must have the same shape")
    Pr = [list(r) for r in P.rows]
    where = {x: i for i, r in enumerate(Q.rows) for x in r}
    n = sum(P.outer)
    out = [0] * n
    for step in range(n, 0, -1):
        i = where[step]
        x = Pr[i].pop()
        for r in range(i - 1, -1, -1):
            row = Pr[r]
            j = bisect_right(row, x) - 1
            row[j], x = x, row[j]
        out[step - 1] = x
        if not Pr[i]:
            Pr.pop(i)
    return tuple(out)


def longest_decreasing(pi: Sequence[int]) -> int:
    """Patience sorting on negated values."""
    tails = []
    for x in pi:
        k = bisect_left(tails, -x)
        if k == len(tails):
            tails.append(-x)
        else:
            tails[k] = -x
    return len(tails)


def restrict_perm(pi: Sequence[int], k: int) -> tuple:
    """pi_{<=k}: delete every value greater than k."""
    return tuple(x for x in pi if x <= k)


def restrict_syt(T: Tableau, k: int) -> Tableau:
    return _as_tableau([[x for x in r if x <= k] for r in T.rows])


# involutions

def is_involution(pi: Sequence[int]) -> bool:
    return all(pi[pi[i] - 1] == i + 1 for i in range(len(pi)))


def arcs(pi: Sequence[int]) -> list:
    """Sorted (opener, closer) pairs of an involution."""
    return [(i, pi[i - 1]) for i in range(1, len(pi) + 1) if pi[i - 1] > i]


def fixed_points(pi: Sequence[int]) -> list:
    return [i for i in range(1, len(pi) + 1) if pi[i - 1] == i]


def involutions(n: int) -> Iterator[tuple]:
    """All involutions of {1..n}."""
    def rec(free, cur):
        if not free:
            yield tuple(cur[1:])
            return
        a = free[0]
        rest = free[1:]
        cur[a] = a
        yield from rec(rest, cur)
        for j, b in enumerate(rest):
            cur[a], cur[b] = b, a
            yield from rec(rest[:j] + rest[j + 1:], cur)
        cur[a] = 0
    yield from rec(list(range(1, n + 1)), [0] * (n + 1))


def is_non_nesting(pi: Sequence[int]) -> bool:
    """No arcs a < b < c < d with (a, d) and (b, c) both arcs."""
    if not is_involution(pi):
        raise ValueError("not an involution")
    closers = [d for _, d in arcs(pi)]
    # openers come sorted, so nesting means a later opener closes earlier
    return all(x < y for x, y in zip(closers, closers[1:]))


def non_nesting_involutions(n: int) -> Iterator[tuple]:
    for pi in involutions(n):
        if is_non_nesting(pi):
            yield pi


def phi(pi: Sequence[int]) -> str:
    """Fixed point -> H, arc opener -> U, arc closer -> D."""
    if not is_non_nesting(pi):
        raise ValueError("phi is defined on non-nesting involutions")
    return "".join("H" if x == i else ("U" if x > i else "D") for i, x in enumerate(pi, 1))


def phi_inverse(path: str) -> tuple:
    """Match each D with the earliest unmatched U."""
    opens, out = [], [0] * len(path)
    for i, c in enumerate(path, 1):
        if c == "H":
            out[i - 1] = i
        elif c == "U":
            opens.append(i)
        else:
            if not opens:
                raise ValueError(f"{path!r} goes below the axis")
            a = opens.pop(0)
            out[a - 1], out[i - 1] = i, a
    if opens:
        raise ValueError(f"{path!r} does not return to the axis")
    return tuple(out)


def classify_sNI(pi: Sequence[int], m: int, s: int) -> bool:
    """Membership in sNI_m: first t blocks {2i-1, 2i} are arcs, later 2j-1 leave [1,2s] and 2j is fixed."""
    if len(pi) != 2 * s + m:
        raise ValueError(f"expected a permutation of size {2 * s + m}, got {len(pi)}")
    if not is_non_nesting(pi):
        return False
    t = 0
    while t < s and pi[2 * t] == 2 * t + 2:
        t += 1
    return all(pi[2 * j - 2] > 2 * s and pi[2 * j - 1] == 2 * j for j in range(t + 1, s + 1))


def sbar_condition(T: Tableau, s: int) -> bool:
    """T_{<=2s} is the two-row tableau whose i-th column holds 2i-1 and 2i."""
    want = (tuple(range(1, 2 * s, 2)), tuple(range(2, 2 * s + 1, 2)))
    got = restrict_syt(T, 2 * s).rows
    return got == (want if s else ())


# skew families with three rows

class SkewFamilies(NamedTuple):
    S3: int
    P3: int
    AE3: int


def three_row_shapes(m: int, s: int) -> Iterator[tuple]:
    """Partitions (l1, l2, l3), zeros allowed, containing (s, s) with |l| = m + 2s."""
    n = m + 2 * s
    for l3 in range(0, n // 3 + 1):
        for l2 in range(max(l3, s), (n - l3) // 2 + 1):
            l1 = n - l2 - l3
            if l1 >= l2:
                yield (l1, l2, l3)


def count_skew_syt_families(m: int, s: int) -> SkewFamilies:
    """Sizes of sSYT_m^(3), sPT_m^(3) and sAE_m^(3)."""
    check_bound(m)
    S = P = A = 0
    for lam in three_row_shapes(m, s):
        c = count_syt(lam, (s, s))
        S += c
        odd = sum(p % 2 for p in lam)
        if odd in (0, 3):
            P += c
        if odd == (1 if sum(lam) % 2 else 2):
            A += c
    return SkewFamilies(S, P, A)


def schensted_fixed_points(m: int, k: int) -> int:
    """I(m, k), counted over involutions and over tableaux with k odd columns; both must agree."""
    if k < 0 or m < 0:
        return 0
    check_bound(m)
    by_inv = sum(1 for pi in involutions(m) if len(fixed_points(pi)) == k)
    by_tab = sum(hook_length_count(lam) for lam in partitions(m)
                 if sum(c % 2 for c in conjugate(lam)) == k)
    if by_inv != by_tab:
        raise AssertionError(f"I({m},{k}): {by_inv} involutions vs {by_tab} tableaux")
    return by_inv


def involution_count_closed(m: int, k: int) -> int:
    """binom(m, k) (m-k-1)!! for m = k mod 2."""
    if k < 0 or k > m or (m - k) % 2:
        return 0
    return comb(m, k) * prod(range(m - k - 1, 0, -2))


def all_permutations(n: int) -> Iterator[tuple]:
    return permutations(range(1, n + 1))
