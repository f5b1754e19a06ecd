"""Young walls of affine type B_n^(1) and their crystal operators.

A column is stored as a block count above the ground state together with the
colour of a lone half-thickness block sitting on top (``None`` otherwise).
Columns are indexed from the right, starting at 1.  Block positions in a
column follow a periodic pattern of length 2n:

* ground Lambda_n: n, n-1, ..., 2, split, split, 2, ..., n-1, n, n (half-height n-blocks);
* ground Lambda_0 / Lambda_1: b, 2, ..., n-1, n, n, n-1, ..., 2, split, split,
  where the ground layer holds one half-thickness block and ``b`` completes it.

A split layer takes one 0-block and one 1-block in either order.  Positions
in different columns at the same index sit at the same height, so a wall is a
weakly decreasing sequence of counts.
"""
from itertools import product
from typing import Iterator, NamedTuple, Sequence

FULL, HALF1, HALF2, SPLIT1, SPLIT2 = "full", "half1", "half2", "split1", "split2"


class AmbiguousWall(ValueError):
    """More than one proper wall has the requested associated partition."""


class GroundState(NamedTuple):
    n: int
    anchor: int          # 0, 1 or n

    def check(self) -> "GroundState":
        if self.n < 3:
            raise ValueError("B_n^(1) needs n >= 3")
        if self.anchor not in (0, 1, self.n):
            raise ValueError(f"anchor {self.anchor} is not of level 1")
        return self

    @property
    def kind(self) -> str:
        return "B" if self.anchor == self.n else "D"


class YoungWall(NamedTuple):
    ground: GroundState
    counts: tuple        # block counts of columns 1, 2, ...
    tops: tuple          # colour of a lone split block on top, else None

    @property
    def n(self) -> int:
        return self.ground.n

    def partition(self) -> tuple:
        return tuple(c for c in self.counts if c)


def _ground_colour(g: GroundState, j: int) -> int:
    """Colour b completing the ground layer of column j (type D grounds)."""
    a = 1 if (j + int(g.anchor == 1)) % 2 else 0
    return 1 - a


def slot(g: GroundState, t: int):
    """(kind, colour) of position t >= 1; colour is None for split slots."""
    n = g.n
    q = (t - 1) % (2 * n) + 1
    if g.anchor == n:
        if q == 1:
            return HALF2, n
        if q < n:
            return FULL, n + 1 - q
        if q == n:
            return SPLIT1, None
        if q == n + 1:
            return SPLIT2, None
        if q < 2 * n:
            return FULL, q - n
        return HALF1, n
    if q == 1:
        return SPLIT2, None
    if q < n:
        return FULL, q
    if q == n:
        return HALF1, n
    if q == n + 1:
        return HALF2, n
    if q < 2 * n:
        return FULL, 2 * n + 1 - q
    return SPLIT1, None


def _is_full(g: GroundState, t: int) -> bool:
    return t > 0 and slot(g, t)[0] not in (HALF1, SPLIT1)


def _split_partner(g: GroundState, j: int, t: int, top) -> int:
    """Colour that completes the split layer ending at position t."""
    if t == 1 and g.anchor != g.n:
        return _ground_colour(g, j)
    return 1 - top


def column_content(g: GroundState, j: int, t: int, top) -> tuple:
    out = [0] * (g.n + 1)
    for p in range(1, t + 1):
        kind, c = slot(g, p)
        if kind == SPLIT1:
            if p == t:
                out[top] += 1
            else:
                out[0] += 1
                out[1] += 1
        elif kind == SPLIT2:
            if p == 1 and g.anchor != g.n:
                out[_ground_colour(g, j)] += 1
        else:
            out[c] += 1
    return tuple(out)


def content(w: YoungWall) -> tuple:
    """alpha-coefficients of the blocks above the ground state."""
    total = [0] * (w.n + 1)
    for j, (t, top) in enumerate(zip(w.counts, w.tops), 1):
        for i, x in enumerate(column_content(w.ground, j, t, top)):
            total[i] += x
    return tuple(total)


def _trim(g, counts, tops) -> YoungWall:
    counts, tops = list(counts), list(tops)
    while counts and counts[-1] == 0:
        counts.pop()
        tops.pop()
    return YoungWall(g, tuple(counts), tuple(tops))


def is_proper(w: YoungWall) -> bool:
    """Wall shape plus: no two full columns of equal height."""
    g, cs, ts = w.ground, w.counts, w.tops
    for j in range(len(cs)):
        t = cs[j]
        if t < 0:
            return False
        partial = t > 0 and slot(g, t)[0] == SPLIT1
        if partial != (ts[j] is not None):
            return False
        if j + 1 < len(cs):
            u = cs[j + 1]
            if u > t:
                return False
            # lone split blocks at equal height must sit in the same front/back slot
            if u == t and partial and ts[j + 1] == ts[j]:
                return False
    full = [t for t in cs if _is_full(g, t)]
    return len(full) == len(set(full))


def is_reduced(w: YoungWall) -> bool:
    """No removable delta-column: 2n blocks of content delta on top of a column."""
    g, period = w.ground, 2 * w.n
    delta = (1, 1) + (2,) * (w.n - 1)
    for j, t in enumerate(w.counts):
        if t < period:
            continue
        cs, ts = list(w.counts), list(w.tops)
        cs[j] -= period
        if cs[j] == 0:
            ts[j] = None
        full = column_content(g, j + 1, t, w.tops[j])
        rest = column_content(g, j + 1, cs[j], ts[j])
        if tuple(a - b for a, b in zip(full, rest)) == delta and is_proper(_trim(g, cs, ts)):
            return False
    return True


def walls_from_partition(lam: Sequence[int], g: GroundState) -> list:
    """Every proper wall whose associated partition is lam."""
    g.check()
    lam = tuple(p for p in lam if p)
    choices = []
    for p in lam:
        choices.append((0, 1) if slot(g, p)[0] == SPLIT1 else (None,))
    out = []
    for tops in product(*choices):
        w = YoungWall(g, lam, tuple(tops))
        if is_proper(w):
            out.append(w)
    return out


def wall_from_partition(lam: Sequence[int], g: GroundState, eps: int | None = None) -> YoungWall:
    """The proper wall with associated partition lam; eps picks the colour of lone split tops."""
    lam = tuple(p for p in lam if p)
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"{lam} is not a partition")
    ws = walls_from_partition(lam, g)
    if eps is not None:
        ws = [w for w in ws if all(t in (None, eps) for t in w.tops)]
    if not ws:
        raise ValueError(f"no proper wall on {g} has partition {lam}")
    if len(ws) > 1:
        raise AmbiguousWall(f"{len(ws)} proper walls on {g} have partition {lam}")
    return ws[0]


def ground_wall(g: GroundState) -> YoungWall:
    return YoungWall(g.check(), (), ())


# signatures and Kashiwara operators

def _set(w: YoungWall, j: int, t: int, top) -> YoungWall:
    cs, ts = list(w.counts), list(w.tops)
    while len(cs) < j:
        cs.append(0)
        ts.append(None)
    cs[j - 1], ts[j - 1] = t, top
    return _trim(w.ground, cs, ts)


def _col(w: YoungWall, j: int):
    if j <= len(w.counts):
        return w.counts[j - 1], w.tops[j - 1]
    return 0, None


def _add(w: YoungWall, j: int, i: int):
    t, top = _col(w, j)
    kind, c = slot(w.ground, t + 1)
    if kind == SPLIT1:
        if i not in (0, 1):
            return None
        new = _set(w, j, t + 1, i)
    elif kind == SPLIT2:
        if i != _split_partner(w.ground, j, t + 1, top):
            return None
        new = _set(w, j, t + 1, None)
    elif c == i:
        new = _set(w, j, t + 1, None)
    else:
        return None
    return new if is_proper(new) else None


def _remove(w: YoungWall, j: int, i: int):
    t, top = _col(w, j)
    if t == 0:
        return None
    kind, c = slot(w.ground, t)
    if kind == SPLIT1:
        if top != i:
            return None
        new = _set(w, j, t - 1, None)
    elif kind == SPLIT2:
        if t == 1 and w.ground.anchor != w.n:
            if i != _ground_colour(w.ground, j):
                return None
            new = _set(w, j, 0, None)
        else:
            if i not in (0, 1):
                return None
            new = _set(w, j, t - 1, 1 - i)
    elif c == i:
        new = _set(w, j, t - 1, None)
    else:
        return None
    return new if is_proper(new) else None


def column_symbol(w: YoungWall, j: int, i: int) -> str:
    """'-' per removable i-block and '+' per addable one, at most twice each."""
    minus = 0
    cur = w
    while minus < 2:
        nxt = _remove(cur, j, i)
        if nxt is None:
            break
        minus, cur = minus + 1, nxt
    plus = 0
    cur = w
    while plus < 2:
        nxt = _add(cur, j, i)
        if nxt is None:
            break
        plus, cur = plus + 1, nxt
    return "-" * minus + "+" * plus


class Signature(NamedTuple):
    minus: int
    plus: int
    symbols: tuple       # per column, leftmost column first
    reduced: tuple       # surviving (sign, column) pairs, left to right


def _cancel(entries: list) -> list:
    """Cancel every (+, -) pair; entries are (sign, tag) read left to right."""
    stack = []
    for e in entries:
        if e[0] == "-" and stack and stack[-1][0] == "+":
            stack.pop()
        else:
            stack.append(e)
    return stack


def _entries(w: YoungWall, i: int, tag=()) -> tuple:
    width = len(w.counts) + 1
    symbols = [column_symbol(w, j, i) for j in range(width, 0, -1)]
    entries = [(c, tag + (width - pos,)) for pos, sym in enumerate(symbols) for c in sym]
    return symbols, entries


def signature(w: YoungWall, i: int) -> Signature:
    """i-signature: per-column symbols and the reduced word after (+, -) cancellation."""
    symbols, entries = _entries(w, i)
    if symbols and symbols[0] == "":
        symbols = symbols[1:]
    red = _cancel(entries)
    minus = sum(1 for c, _ in red if c == "-")
    return Signature(minus, len(red) - minus, tuple(s or "." for s in symbols),
                     tuple((c, tag[0]) for c, tag in red))


def epsilon(w: YoungWall, i: int) -> int:
    return signature(w, i).minus


def phi(w: YoungWall, i: int) -> int:
    return signature(w, i).plus


def crystal_e(w: YoungWall, i: int):
    red = _cancel(_entries(w, i)[1])
    minus = [tag for c, tag in red if c == "-"]
    if not minus:
        return None
    return _remove(w, minus[-1][0], i)


def crystal_f(w: YoungWall, i: int):
    red = _cancel(_entries(w, i)[1])
    plus = [tag for c, tag in red if c == "+"]
    if not plus:
        return None
    return _add(w, plus[0][0], i)


def weight_pairing(w: YoungWall, i: int) -> int:
    """<h_i, wt(w)> = phi_i - epsilon_i."""
    s = signature(w, i)
    return s.plus - s.minus


# tensor products: factor 1 is leftmost and e_i acts on it when phi_1 >= eps_2

class TensorWall(NamedTuple):
    factors: tuple


def _tensor_entries(t: TensorWall, i: int) -> list:
    out = []
    for f, w in enumerate(t.factors):
        out.extend(_entries(w, i, (f,))[1])
    return out


def tensor_signature(t: TensorWall, i: int) -> tuple:
    red = _cancel(_tensor_entries(t, i))
    minus = sum(1 for c, _ in red if c == "-")
    return minus, len(red) - minus


def _replace(t: TensorWall, f: int, w) -> TensorWall | None:
    if w is None:
        return None
    fs = list(t.factors)
    fs[f] = w
    return TensorWall(tuple(fs))


def tensor_e(t: TensorWall, i: int):
    red = _cancel(_tensor_entries(t, i))
    minus = [tag for c, tag in red if c == "-"]
    if not minus:
        return None
    f, j = minus[-1]
    return _replace(t, f, _remove(t.factors[f], j, i))


def tensor_f(t: TensorWall, i: int):
    red = _cancel(_tensor_entries(t, i))
    plus = [tag for c, tag in red if c == "+"]
    if not plus:
        return None
    f, j = plus[0]
    return _replace(t, f, _add(t.factors[f], j, i))


def tensor_content(t: TensorWall) -> tuple:
    return tuple(map(sum, zip(*(content(w) for w in t.factors))))


def highest_weight(t: TensorWall) -> tuple:
    """Apply e_i until none applies; returns (highest weight element, colours used)."""
    n = t.factors[0].n
    path = []
    while True:
        for i in range(n + 1):
            nxt = tensor_e(t, i)
            if nxt is not None:
                t = nxt
                path.append(i)
                break
        else:
            return t, tuple(path)


# connectivity index

def contains_from(w1: YoungWall, w2: YoungWall, s: int) -> bool:
    """w1 contains (w2)_{>= s+1}: matching patterns and column-wise content domination."""
    g1, g2 = w1.ground, w2.ground
    width = max(len(w1.counts), len(w2.counts) - s) + 2
    for t in range(width):
        j1, j2 = 1 + t, s + 1 + t
        if g1.kind != g2.kind:
            return False
        if g1.kind == "D" and _ground_colour(g1, j1) != _ground_colour(g2, j2):
            return False
        c1 = column_content(g1, j1, *_col(w1, j1))
        c2 = column_content(g2, j2, *_col(w2, j2))
        if any(a < b for a, b in zip(c1, c2)):
            return False
    return True


def s_index(lam1: Sequence[int], lam2: Sequence[int], g1: GroundState, g2: GroundState,
            eps: int | None = None) -> int:
    """Least s >= 0 with Y^lam1 containing (Y^lam2)_{>= s+1}."""
    w1 = wall_from_partition(lam1, g1, eps)
    w2 = wall_from_partition(lam2, g2, eps)
    return wall_s_index(w1, w2)


def wall_s_index(w1: YoungWall, w2: YoungWall) -> int:
    s = 0
    while not contains_from(w1, w2, s):
        s += 1
        if s > len(w2.counts) + 2:
            raise ValueError("walls of different types have no connectivity index")
    return s


# component counts

def ordered_splits(m: int, k: int) -> Iterator[tuple]:
    """All k-tuples of strict partitions whose parts merge to (m, m-1, ..., 1)."""
    for labels in product(range(k), repeat=m):
        rows = [[] for _ in range(k)]
        for idx, r in enumerate(labels):
            rows[r].append(m - idx)
        yield tuple(tuple(r) for r in rows)


def anchored_highest(n: int, k: int, s: int, g: GroundState, eps: int = 0) -> TensorWall:
    """(k-1) copies of the ground wall followed by the wall of staircase(s)."""
    from .tableaux_core import staircase
    tail = wall_from_partition(staircase(s), g, eps if s >= n else None)
    return TensorWall((ground_wall(g),) * (k - 1) + (tail,))


def connected_component_count(n: int, k: int, s: int, m: int, eps: int = 0) -> int:
    """k-fold tensor walls on Lambda_n with content of Y^lambda(m) in the component of the anchor.

    Matches |sB_m^(k)| while m <= n; staircases with parts above n leave the
    pattern bound and the two counts part ways.
    """
    from .tableaux_core import staircase
    if not (3 <= n <= 6 and 1 <= k <= 4 and 0 <= s <= m <= 7):
        raise ValueError("component counts cover 3 <= n <= 6, k <= 4, s <= m <= 7")
    g = GroundState(n, n).check()
    target = content(wall_from_partition(staircase(m), g, eps if m >= n else None))
    anchor = anchored_highest(n, k, s, g, eps)
    count = 0
    for rows in ordered_splits(m, k):
        options = [walls_from_partition(r, g) for r in rows]
        for ws in product(*options):
            t = TensorWall(tuple(ws))
            if tensor_content(t) != target:
                continue
            if highest_weight(t)[0] == anchor:
                count += 1
    return count


def spin_anchor(n: int, s: int) -> TensorWall:
    """Lambda_0 (x) Y^lambda(s-1) on Lambda_eps, eps = s mod 2."""
    from .tableaux_core import staircase
    tail = wall_from_partition(staircase(max(s - 1, 0)), GroundState(n, s % 2))
    return TensorWall((ground_wall(GroundState(n, 0)), tail))


def spin_component_members(n: int, s: int, m: int) -> list:
    """Splits (lam1, lam2) of lambda(m) with Y_Lambda0 (x) Y_Lambda_eps in the component of spin_anchor."""
    if not (3 <= n <= 6 and 0 <= m <= n and 0 <= s <= m + 1):
        raise ValueError("spin components cover 3 <= n <= 6, m <= n, s <= m + 1")
    g1, g2 = GroundState(n, 0), GroundState(n, s % 2)
    anchor = spin_anchor(n, s)
    out = []
    for rows in ordered_splits(m, 2):
        t = TensorWall((wall_from_partition(rows[0], g1), wall_from_partition(rows[1], g2)))
        if highest_weight(t)[0] == anchor:
            out.append(rows)
    return out
