"""Generalized Motzkin, Riordan, Catalan and Pascal numbers and their lattice paths.

Paths are strings over ``U`` (1,1), ``H`` (1,0) and ``D`` (1,-1) starting at
the origin.  Every number is computed twice: by dynamic programming over the
recursion, and by a closed form.  ``verify_identities`` compares them.
"""
from functools import lru_cache
from math import comb
from typing import Iterator

from .tableaux_core import check_bound

KINDS = ("motzkin", "riordan", "dyck", "pascal")
STEP = {"U": 1, "H": 0, "D": -1}


@lru_cache(maxsize=None)
def _motzkin_dp(m: int, s: int) -> int:
    if s < 0 or s > m:
        return 0
    if m == 0:
        return 1
    return _motzkin_dp(m - 1, s) + _motzkin_dp(m - 1, s - 1) + _motzkin_dp(m - 1, s + 1)


@lru_cache(maxsize=None)
def _riordan_dp(m: int, s: int) -> int:
    if s < 0 or s > m:
        return 0
    if m == 0:
        return 1
    if s == 0:
        return _riordan_dp(m - 1, 1)
    return _riordan_dp(m - 1, s) + _riordan_dp(m - 1, s - 1) + _riordan_dp(m - 1, s + 1)


@lru_cache(maxsize=None)
def _catalan_dp(m: int, s: int) -> int:
    if s < 0 or s > m:
        return 0
    if m == 0:
        return 1
    return _catalan_dp(m - 1, s - 1) + _catalan_dp(m - 1, s + 1)


@lru_cache(maxsize=None)
def _pascal_dp(m: int, s: int) -> int:
    # Walks may dip below the axis, so recurse over signed heights.
    if abs(s) > m:
        return 0
    if m == 0:
        return 1
    return _pascal_dp(m - 1, s - 1) + _pascal_dp(m - 1, s + 1)


def motzkin(m: int, s: int = 0) -> int:
    """M_(m,s): Motzkin paths ending at (m, s)."""
    return _motzkin_dp(m, s)


def riordan(m: int, s: int = 0) -> int:
    """R_(m,s): Motzkin paths ending at (m, s) with no horizontal step on the axis."""
    return _riordan_dp(m, s)


def catalan(m: int, s: int = 0) -> int:
    """C_(m,s): Dyck paths ending at (m, s)."""
    return _catalan_dp(m, s)


def pascal(m: int, s: int = 0) -> int:
    """B_(m,s): up/down walks ending at (m, s), allowed below the axis."""
    if s < 0:
        return 0
    return _pascal_dp(m, s)


def catalan_number(n: int) -> int:
    return comb(2 * n, n) // (n + 1) if n >= 0 else 0


# closed forms

def ballot(j: int, s: int) -> int:
    """Dyck paths of length j ending at height s, as a binomial difference."""
    if s < 0 or s > j or (j - s) % 2:
        return 0
    d = (j - s) // 2
    return comb(j, d) - (comb(j, d - 1) if d >= 1 else 0)


def motzkin_closed(m: int, s: int) -> int:
    """Choose the non-horizontal steps, then a Dyck path on them."""
    if s < 0 or s > m:
        return 0
    return sum(comb(m, j) * ballot(j, s) for j in range(s, m + 1))


def riordan_number_closed(m: int) -> int:
    if m == 0:
        return 1
    if m == 1:
        return 0
    total = sum(comb(m + 1, i) * comb(m - i - 1, i - 1) for i in range(1, m // 2 + 1))
    return total // (m + 1)


def riordan_closed(m: int, s: int) -> int:
    """Alternating Motzkin sum for s >= 1; the Riordan number formula for s = 0."""
    if s < 0 or s > m:
        return 0
    if s == 0:
        return riordan_number_closed(m)
    return sum((-1) ** i * (motzkin_closed(m - 1 - i, s) + motzkin_closed(m - 1 - i, s - 1))
               for i in range(0, m - s + 1))


def catalan_closed(m: int, s: int) -> int:
    if s < 0 or s > m:
        return 0
    return ballot(m, s)


def pascal_closed(m: int, s: int) -> int:
    if s < 0 or s > m or (m - s) % 2:
        return 0
    return comb(m, (m - s) // 2)


NUMBERS = {"motzkin": motzkin, "riordan": riordan, "catalan": catalan, "pascal": pascal}
CLOSED = {"motzkin": motzkin_closed, "riordan": riordan_closed,
          "catalan": catalan_closed, "pascal": pascal_closed}


def triangle(kind: str, rows: int) -> dict:
    """Entries (m, s) -> value for 0 <= s <= m < rows."""
    f = NUMBERS[kind]
    return {(m, s): f(m, s) for m in range(rows) for s in range(m + 1)}


# explicit paths

def height_profile(path: str) -> list:
    h, out = 0, [0]
    for c in path:
        h += STEP[c]
        out.append(h)
    return out


def is_path_of_kind(path: str, kind: str) -> bool:
    hs = height_profile(path)
    if kind == "pascal":
        return "H" not in path
    if min(hs) < 0:
        return False
    if kind == "dyck":
        return "H" not in path
    if kind == "riordan":
        return all(not (c == "H" and hs[i] == 0) for i, c in enumerate(path))
    return kind == "motzkin"


def enumerate_paths(kind: str, m: int, s: int, bound: int | None = None) -> list:
    """All kind-paths ending at (m, s), in lexicographic order of step strings (D < H < U)."""
    if kind not in KINDS:
        raise ValueError(f"unknown path kind {kind!r}")
    check_bound(m, bound)
    steps = "DU" if kind in ("dyck", "pascal") else "DHU"
    floor = None if kind == "pascal" else 0
    out = []

    def rec(prefix, h):
        left = m - len(prefix)
        if abs(s - h) > left:
            return
        if left == 0:
            out.append("".join(prefix))
            return
        for c in steps:
            if c == "H" and kind == "riordan" and h == 0:
                continue
            nh = h + STEP[c]
            if floor is not None and nh < floor:
                continue
            prefix.append(c)
            rec(prefix, nh)
            prefix.pop()
    if 0 <= s <= m:
        rec([], 0)
    return out


def _first_axis_h(path: str):
    h = 0
    for i, c in enumerate(path):
        if c == "H" and h == 0:
            return i
        h += STEP[c]
    return None


def nr_shift(path: str) -> str:
    """Replace the first horizontal step on the axis by an up step."""
    if not is_path_of_kind(path, "motzkin"):
        raise ValueError(f"{path!r} is not a Motzkin path")
    i = _first_axis_h(path)
    if i is None:
        raise ValueError(f"{path!r} has no horizontal step on the axis")
    return path[:i] + "U" + path[i + 1:]


def nr_unshift(path: str) -> str:
    """Inverse of nr_shift: the last up step leaving the axis becomes horizontal."""
    if not is_path_of_kind(path, "riordan") or not path or height_profile(path)[-1] < 1:
        raise ValueError(f"{path!r} is not a Riordan path ending above the axis")
    hs = height_profile(path)
    i = max(j for j, c in enumerate(path) if c == "U" and hs[j] == 0)
    return path[:i] + "H" + path[i + 1:]


def iter_nr_domain(m: int, s: int) -> Iterator[str]:
    """Motzkin paths to (m, s) with at least one horizontal step on the axis."""
    for p in enumerate_paths("motzkin", m, s):
        if _first_axis_h(p) is not None:
            yield p


class IdentityFailure(AssertionError):
    pass


def verify_identities(m_max: int) -> list:
    """Check the path-number identities for all m <= m_max; returns (name, range) lines."""
    report = []

    def fail(name, m, s=None):
        where = f"(m={m})" if s is None else f"(m={m}, s={s})"
        raise IdentityFailure(f"{name} fails at {where}")

    for m in range(m_max + 1):
        for s in range(m + 1):
            for kind in NUMBERS:
                if NUMBERS[kind](m, s) != CLOSED[kind](m, s):
                    fail(f"{kind} recursion vs closed form", m, s)
    report.append(("recursion = closed form (motzkin, riordan, catalan, pascal)", f"0 <= s <= m <= {m_max}"))

    for m in range(m_max + 1):
        if motzkin(m) != riordan(m) + riordan(m + 1):
            fail("M_m = R_m + R_(m+1)", m)
    report.append(("M_m = R_m + R_(m+1)", f"0 <= m <= {m_max}"))

    for m in range(m_max + 1):
        if 3 ** m != sum((s + 1) * motzkin(m, s) for s in range(m + 1)):
            fail("3^m = sum (s+1) M_(m,s)", m)
    report.append(("3^m = sum (s+1) M_(m,s)", f"0 <= m <= {m_max}"))

    for m in range(m_max + 1):
        if 3 ** m != sum((2 * s + 1) * riordan(m, s) for s in range(m + 1)):
            fail("3^m = sum (2s+1) R_(m,s)", m)
    report.append(("3^m = sum (2s+1) R_(m,s)", f"0 <= m <= {m_max}"))

    for m in range(1, m_max + 1):
        for s in range(1, m + 1):
            if riordan(m, s) != motzkin(m - 1, s) + motzkin(m - 1, s - 1) - riordan(m - 1, s):
                fail("R_(m,s) = M_(m-1,s) + M_(m-1,s-1) - R_(m-1,s)", m, s)
            alt = sum((-1) ** i * (motzkin(m - 1 - i, s) + motzkin(m - 1 - i, s - 1))
                      for i in range(m - s + 1))
            if riordan(m, s) != alt:
                fail("R_(m,s) alternating Motzkin sum", m, s)
    report.append(("R_(m,s) = M_(m-1,s) + M_(m-1,s-1) - R_(m-1,s) and its iterate",
                   f"1 <= s <= m <= {m_max}"))
    return report
