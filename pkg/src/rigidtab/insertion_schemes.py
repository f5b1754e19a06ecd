"""Box insertion, the rigid jeu de taquin of level 3, and the path bijections.

Tableaux are handled here as pairs ``(rows, s)``: ``rows`` is the sequence of
strict partitions of a reverse-standard skew tableau of shape mu / (s^(k-1)).
The public functions also accept and return ``Tableau`` values.
"""
from typing import Sequence

from .rigid_tableaux import RigidIndex, enumerate_sB
from .tableaux_core import (
    Tableau, normalize_partition, row_contains, shift_of, skew_violation, tableau_from_strict_sequence,
)


class InvariantError(RuntimeError):
    """An algorithm left its proven domain (should never happen)."""


def _rows(T) -> tuple:
    rows = T.rows if isinstance(T, Tableau) else T
    return tuple(normalize_partition(r) for r in rows)


def _is_skew(rows, s: int) -> bool:
    rows = tuple(rows)
    if any(any(a <= b for a, b in zip(r, r[1:])) for r in rows):
        return False
    return skew_violation(rows, s) is None


def _is_rigid(rows, s: int) -> bool:
    if not _is_skew(rows, s):
        return False
    if s == 0:
        return True
    return not row_contains(rows[-2], rows[-1][s - 1:])


def insert_box(lams: Sequence[Sequence[int]], u: int, m: int) -> tuple:
    """(m) * lambda^(u): prepend m to row u (1-based)."""
    rows = [tuple(r) for r in _rows(lams)]
    if not rows:
        rows = [()] * u
    if not 1 <= u <= len(rows):
        raise ValueError(f"row index u={u} outside 1..{len(rows)}")
    if any(x >= m for r in rows for x in r):
        raise ValueError(f"{m} does not exceed every entry")
    rows[u - 1] = (m,) + rows[u - 1]
    return tuple(rows)


# rigid jeu de taquin, level 3

def _jdt_rows(rows, s: int, m: int) -> tuple:
    """Rows of T' in sB_(m-1) with shift s+1 -> rows of T with shift s."""
    lam, mu, nu = (list(r) for r in rows)
    row1 = [m] + lam                  # starts at column s+1
    left, right = [], list(mu)        # row 2: left part, hole, right part
    row3 = list(nu)                   # starts at column 1
    c = s + 1
    for _ in range(len(row1) + 1):
        j = c - s                     # index of the cell north-east of the hole
        if j < len(row1):
            cand = (tuple(row1[:j] + row1[j + 1:]), tuple(left + [row1[j]] + right), tuple(row3))
            if _is_skew(cand, s):
                return cand
        if c - 1 < len(row3):
            cand = (tuple(row1), tuple(left + [row3[c - 1]] + right), tuple(row3[:c - 1] + row3[c:]))
            if _is_skew(cand, s):
                return cand
        if not right:
            break
        left.append(right.pop(0))
        c += 1
    raise InvariantError(f"rigid jeu de taquin did not terminate on {rows} (s={s + 1})")


def _reverse_jdt_rows(rows, s: int) -> tuple:
    """Rows of T in sB_m satisfying the jdt condition -> rows of T' with shift s+1."""
    lam, mu, nu = (list(r) for r in rows)
    row1 = lam[1:]                    # starts at column s+2 once m is removed
    row3 = list(nu)
    for i in range(len(mu)):
        left, x, right = mu[:i], mu[i], mu[i + 1:]
        c = s + 1 + i
        cand = (tuple(row1), tuple(left + right), tuple(row3[:c - 1] + [x] + row3[c - 1:]))
        if len(row3) >= c - 1 and _is_skew(cand, s + 1):
            return cand
        j = c - s - 1
        if j <= len(row1):
            cand = (tuple(row1[:j] + [x] + row1[j:]), tuple(left + right), tuple(row3))
            if _is_skew(cand, s + 1):
                return cand
    raise InvariantError(f"reverse rigid jeu de taquin failed on {rows} (s={s})")


def jdt_condition(rows, s: int, m: int) -> bool:
    """lambda_1 = m and (lambda_{>=2}, mu, nu) is not in sB_(m-1)."""
    lam, mu, nu = rows
    return bool(lam) and lam[0] == m and not _is_rigid((lam[1:], mu, nu), s)


def _as_tableau(rows, s) -> Tableau:
    return tableau_from_strict_sequence(rows, s)


def rigid_jdt(Tp, m: int, s: int | None = None) -> Tableau:
    """Map T' in (s+1)B_(m-1)^(3) to T in sB_m^(3)."""
    rows = _rows(Tp)
    sp = shift_of(Tp) if s is None else s + 1
    if len(rows) != 3 or sp < 1 or not _is_rigid(rows, sp) or sum(map(len, rows)) != m - 1:
        raise ValueError("rigid_jdt needs a member of (s+1)B_(m-1)^(3) with s >= 0")
    out = _jdt_rows(rows, sp - 1, m)
    return _as_tableau(out, sp - 1)


def reverse_rigid_jdt(T, s: int | None = None) -> Tableau:
    """Inverse of rigid_jdt on the tableaux with lambda_1 = m that are not +1 insertions."""
    rows = _rows(T)
    s = shift_of(T) if s is None else s
    m = sum(map(len, rows))
    if len(rows) != 3 or not _is_rigid(rows, s):
        raise ValueError("reverse_rigid_jdt needs a member of sB_m^(3)")
    if not jdt_condition(rows, s, m):
        raise ValueError("tableau is obtained by box insertion into row 1 or row 3")
    return _as_tableau(_reverse_jdt_rows(rows, s), s + 1)


def classify_level3(rows, s: int):
    """Source of T in sB_m^(3): ('H', T', s), ('U', T', s-1) or ('D', T', s+1)."""
    m = sum(map(len, rows))
    if m == 0:
        raise ValueError("the empty tableau has no predecessor")
    lam, mu, nu = rows
    if lam and lam[0] == m and _is_rigid((lam[1:], mu, nu), s):
        return "H", (lam[1:], mu, nu), s
    if nu and nu[0] == m:
        return "U", (lam, mu, nu[1:]), s - 1
    return "D", _reverse_jdt_rows(rows, s), s + 1


def partition_level3(m: int, s: int) -> tuple:
    """sB_m^(3) split into (+1 insertions, +3 insertions, jeu de taquin images); m >= 1."""
    if m < 1:
        raise ValueError("the decomposition needs m >= 1")
    parts = ([], [], [])
    for T in enumerate_sB(RigidIndex(m, s, 3)):
        kind = classify_level3(_rows(T), s)[0]
        parts["HUD".index(kind)].append(T)
    return parts


def tableau_to_motzkin(T, s: int | None = None) -> str:
    """Record H / U / D while peeling off m, m-1, ..., 1."""
    rows = _rows(T)
    if not rows:
        return ""
    s = shift_of(T) if s is None else s
    if len(rows) != 3 or not _is_rigid(rows, s):
        raise ValueError("expected a member of sB_m^(3)")
    steps = []
    while any(rows):
        kind, rows, s = classify_level3(rows, s)
        steps.append(kind)
    if s != 0:
        raise InvariantError("peeling did not end at the empty tableau with s = 0")
    return "".join(reversed(steps))


# level 2

_REFLECT = str.maketrans("UD", "DU")

def classify_level2(rows, s: int):
    """Source of T in sB_m^(2): ('row1', T', s+1), ('row1_plain', T', 0) or ('row2', T', s-1)."""
    m = sum(map(len, rows))
    lam, mu = rows
    if lam and lam[0] == m:
        rest = (lam[1:], mu)
        if s == 0 and _is_skew(rest, 0):
            return "row1_plain", rest, 0
        return "row1", rest, s + 1
    if mu and mu[0] == m:
        return "row2", (lam, mu[1:]), s - 1
    raise InvariantError(f"{m} is in neither row of {rows}")


def tableau_to_pascal_path(T, s: int | None = None) -> str:
    """Up/down word of the level-2 recording rule, keyed on the parity of m - s.

    The rule taken step by step ends at height -(b - a) when m - s is odd, so
    the word is reflected in that case to land at (m, b - a).
    """
    rows = _rows(T)
    s = shift_of(T) if s is None else s
    if len(rows) == 1:
        rows = (rows[0], ())
    if len(rows) != 2 or not _is_rigid(rows, s):
        raise ValueError("expected a member of sB_m^(2)")
    m0, s0 = sum(map(len, rows)), s
    steps = []
    while any(rows):
        m = sum(map(len, rows))
        kind, nxt, ns = classify_level2(rows, s)
        up = kind in ("row2", "row1_plain")
        if (m - s) % 2:
            up = not up
        steps.append("U" if up else "D")
        rows, s = nxt, ns
    word = "".join(reversed(steps))
    if (m0 - s0) % 2:
        word = word.translate(_REFLECT)
    return word
