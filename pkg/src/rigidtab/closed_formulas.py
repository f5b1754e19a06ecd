"""Closed formulas for the rigid-tableau counts, each paired with a brute-force oracle.

All arithmetic is exact: integers throughout, ``Fraction`` where a formula has
rational weights, and Bareiss elimination for determinants.
"""
from fractions import Fraction
from math import comb, factorial, prod
from typing import Callable, Iterator, NamedTuple

from .lattice_paths import catalan_number, riordan_number_closed
from .rigid_tableaux import count_sB, count_sD
from .rs_bijections import involution_count_closed, schensted_fixed_points
from .tableaux_core import count_syt_rows, hook_length_count


def double_factorial(n: int) -> int:
    """n!! with (-1)!! = 0!! = 1."""
    return prod(range(n, 0, -2)) if n > 0 else 1


def _as_int(x) -> int:
    x = Fraction(x)
    if x.denominator != 1:
        raise ArithmeticError(f"formula produced a non-integer {x}")
    return x.numerator


def _C(i: int) -> int:
    return catalan_number(i)


# tableaux with at most k rows

def b_rows_atmost(m: int, k: int) -> int:
    """|B_m^(k)|, the SYT with m cells and at most k rows, for k = 2..5."""
    if m < 0:
        return 0
    if k == 2:
        return comb(m, m // 2)
    if k == 3:
        return sum(_C(i) * comb(m, 2 * i) for i in range(m // 2 + 1))
    if k == 4:
        return _C((m + 2) // 2) * _C((m + 1) // 2)
    if k == 5:
        return _as_int(6 * sum(Fraction(comb(m, 2 * i) * factorial(2 * i + 2) * _C(i),
                                        factorial(i + 2) * factorial(i + 3))
                               for i in range(m // 2 + 1)))
    raise ValueError(f"no closed formula for k={k}; use selberg()")


# levels 2 and 3

def sB2(m: int, s: int) -> int:
    if s < 0 or s > m:
        return 0
    return comb(m, (m - s) // 2)


def sD2(u: int, s: int) -> int:
    """|sD^(2)_(2u-1+s)|."""
    if u < 0 or s < 0 or 2 * u - 1 + s < 0:
        return 0
    return comb(2 * u + s - (s == 0), u)


def sB3(m: int, s: int) -> int:
    """Sum over the number 2i+s of non-horizontal steps of a Motzkin path to (m, s)."""
    if s < 0 or s > m:
        return 0
    return sum(comb(m, 2 * i + s) * (comb(2 * i + s, i) - (comb(2 * i + s, i - 1) if i else 0))
               for i in range((m - s) // 2 + 1))


def sD3(m: int, s: int) -> int:
    """Alternating sum of level-3 rigid counts; s = 0 is read with shift 1 and m - 1."""
    if s < 0 or m < s - 1:
        return 0
    d = 1 if s == 0 else 0
    t = s + d
    return sum((-1) ** i * (sB3(m - d - i, t) + sB3(m - d - i, t - 1))
               for i in range(m + 1 - d - s + 1))


def d45(n: int, k: int) -> int:
    """|D_n^(k)| for k = 4, 5, from the Catalan sums (n = number of cells >= 1)."""
    if n < 1:
        raise ValueError("d45 needs at least one cell")
    t = 1 if n % 2 else 2
    return s_kt(n, k, t)


# fixed number of odd rows

def _k5_sum(top: int, hi1: int, hi2: int, weighted: bool) -> Fraction:
    """sum_{i<=hi1} w binom(top,2i) C_i C_(i+1) - sum_{i<=hi2} w binom(top,2i+1) C_(i+1)^2."""
    w = (lambda i: Fraction(2 * i, i + 3)) if weighted else (lambda i: 1)
    return (sum(w(i) * comb(top, 2 * i) * _C(i) * _C(i + 1) for i in range(hi1 + 1))
            - sum(w(i) * comb(top, 2 * i + 1) * _C(i + 1) ** 2 for i in range(hi2 + 1)))


def s_kt(n: int, k: int, t: int) -> int:
    """|S_n^(k,t)|: SYT with n cells, at most k rows, exactly t odd rows (k <= 5)."""
    if not 1 <= k <= 5 or not 0 <= t <= k:
        raise ValueError(f"(k, t) = ({k}, {t}) is outside the table")
    if n < 0 or (n - t) % 2:
        return 0
    if t > n:
        return 0
    if k == 1:
        return 1
    # write n = 2m for even t and n = 2m - 1 for odd t
    m = n // 2 if t % 2 == 0 else (n + 1) // 2
    if k == 2:
        if n == 0:
            return 1 if t == 0 else 0
        return comb(2 * m - 1, m)
    if k == 3:
        if t in (0, 1):
            return riordan_number_closed(2 * m)
        if t == 2:
            return riordan_number_closed(2 * m + 1)
        return riordan_number_closed(n)               # n = 2m' + 1 holds R_(2m'+1)
    if k == 4:
        if t in (0, 1):
            return comb(_C(m) + 1, 2)
        if t == 2:
            return _C(m) * _C(m + 1) - _C(m) ** 2
        return comb(_C(m), 2)
    if t in (0, 1):
        return _as_int(_k5_sum(2 * m, m, m - 1, False))
    if t == 2:
        return _as_int(_k5_sum(2 * m, m, m - 1, True))
    if t == 3:
        return _as_int(_k5_sum(2 * m - 1, m - 1, m - 1, True))
    # the tail sum over binom(2j-1, .) gives |S_(2j-2)^(5,4)| = |S_(2j-1)^(5,5)|
    j = m + 1 if t == 4 else m
    return _as_int(_k5_sum(2 * j - 1, j - 1, j - 1, False))


# Selberg-type determinant sums

def bareiss_det(M) -> int:
    """Exact integer determinant by fraction-free elimination."""
    A = [list(map(int, row)) for row in M]
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if A[r][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def compositions(m: int, parts: int) -> Iterator[tuple]:
    """Weak compositions of m into the given number of parts, lexicographically."""
    if parts == 0:
        if m == 0:
            yield ()
        return
    if parts == 1:
        yield (m,)
        return
    for a in range(m + 1):
        for rest in compositions(m - a, parts - 1):
            yield (a,) + rest


def multinomial(m: int, t) -> int:
    out = factorial(m)
    for x in t:
        out //= factorial(x)
    return out


def central_binomial(n: int) -> int:
    """binom(n, floor(n/2)), the gamma_n of the six-row corollary."""
    return comb(n, n // 2) if n >= 0 else 0


def catalan_half(x2: int) -> int:
    """C(x2 / 2): a Catalan number on integers, 0 on half-integers."""
    if x2 < 0 or x2 % 2:
        return 0
    return catalan_number(x2 // 2)


def selberg(m: int, k: int) -> int:
    """|S_m^(k)| by the determinant sums; k is the row bound."""
    if k < 1 or m < 0:
        raise ValueError("selberg needs k >= 1 and m >= 0")
    h = k // 2
    if k % 2 == 0:
        return sum(multinomial(m, t) * bareiss_det(
            [[central_binomial(t[i - 1] + 2 * h - i - j) for j in range(1, h + 1)] for i in range(1, h + 1)])
            for t in compositions(m, h))
    total = 0
    for t in compositions(m, h + 1):
        tt = t[1:]
        total += multinomial(m, t) * bareiss_det(
            [[catalan_half(tt[i - 1] + 2 * h - i - j) for j in range(1, h + 1)] for i in range(1, h + 1)])
    return total


def selberg_six(m: int) -> int:
    """The 3x3 central-binomial determinant sum for six rows."""
    g = central_binomial
    return sum(multinomial(m, (i, j, l)) * bareiss_det([
        [g(i + 4), g(i + 3), g(i + 2)],
        [g(j + 3), g(j + 2), g(j + 1)],
        [g(l + 2), g(l + 1), g(l)]]) for i, j, l in compositions(m, 3))


# limits as k grows

def b_infty(m: int) -> int:
    """Number of involutions of m letters."""
    return sum(comb(m, 2 * s) * double_factorial(2 * s - 1) for s in range(m // 2 + 1))


def d_infty(m: int) -> int:
    """m!! for odd m, (m/2)(m-1)!! for even m (0 at m = 0)."""
    if m <= 0:
        return 0
    return double_factorial(m) if m % 2 else (m // 2) * double_factorial(m - 1)


def sb_infty(m: int, s: int) -> int:
    if s < 0 or s > m:
        return 0
    return comb(m, s) * b_infty(m - s)


def sd_infty(m: int, s: int) -> int:
    """Bessel coefficients binom(m+1,s)(m-s)!! off parity, a two-term sum on parity."""
    if s < 0 or m < s - 1:
        return 0
    if (m - s) % 2:
        return comb(m + 1, s) * double_factorial(m - s)
    return comb(m, s) * d_infty(m - s) + (comb(m, s - 1) * d_infty(m - s + 1) if s else 0)


LIMITS = {"Binfty": lambda m, s: b_infty(m), "Dinfty": lambda m, s: d_infty(m),
          "sBinfty": sb_infty, "sDinfty": sd_infty}


def limits(m: int, s: int, which: str) -> int:
    if which not in LIMITS:
        raise ValueError(f"unknown limit {which!r}")
    return LIMITS[which](m, s)


def stabilization_bounds(m: int, s: int, family: str) -> int:
    """Smallest row bound k from which the count equals its limit.

    Families: ``B`` (sB_m^(k)), ``D`` (D_m^(k), s ignored) and ``sD``.
    """
    if family == "B":
        return m - s + 2
    if family == "D":
        return (m + 1) // 2 if m % 2 else m // 2 + 1
    if family == "sD":
        return m - s + 3
    raise ValueError(f"unknown family {family!r}")


def sb_boundary(m: int, s: int, k: int) -> int:
    """|sB_m^(k)| for k = m-s+1 and k = m-s, as limit minus a correction."""
    lim = sb_infty(m, s)
    if s == 0:
        return lim
    if k == m - s + 1:
        return lim - comb(m - 1, s - 1)
    if k == m - s and m - s >= 1:
        return lim - m * comb(m - 2, s - 1)
    raise ValueError("boundary formulas cover k = m-s+1 and k = m-s >= 1")


# reductions just below the stable range

class ReductionLine(NamedTuple):
    name: str
    formula: int
    enumerated: int


def reduction_values(m: int) -> dict:
    """Closed values for D_(2m-1)^(m-1), D_(2m)^(m), D_(2m-1)^(m-2), D_(2m)^(m-1)."""
    if m < 2:
        raise ValueError("reductions need m >= 2")
    f = hook_length_count
    odd, even = double_factorial(2 * m - 1), m * double_factorial(2 * m - 1)
    out = {
        "D(2m-1, m-1)": odd - catalan_number(m),
        "D(2m, m)": even - _as_int(Fraction(3 * factorial(2 * m), factorial(m - 1) * factorial(m + 2))),
    }
    if m >= 3:
        out["D(2m-1, m-2)"] = (odd - catalan_number(m) - comb(2 * m - 1, m + 1)
                               - _as_int(Fraction(factorial(2 * m - 1),
                                                  factorial(m) * factorial(m - 3) * (m + 2))))
        out["D(2m, m-1)"] = (out["D(2m, m)"]
                             - _as_int(Fraction(4, m + 2) * Fraction(factorial(2 * m - 1),
                                                                     factorial(m) * factorial(m - 2)))
                             - f((4,) + (2,) * (m - 3) + (1, 1)))
    return out


def reduction_corollaries(m: int) -> list:
    """Each reduction formula against enumeration; raises on the first disagreement."""
    cells = {"D(2m-1, m-1)": (2 * m - 1, m - 1), "D(2m, m)": (2 * m, m),
             "D(2m-1, m-2)": (2 * m - 1, m - 2), "D(2m, m-1)": (2 * m, m - 1)}
    report = []
    for name, value in reduction_values(m).items():
        n, k = cells[name]
        got = count_sD(n, 0, k)
        if got != value:
            raise AssertionError(f"{name} at m={m}: formula {value}, enumeration {got}")
        report.append(ReductionLine(name, value, got))
    return report


# registry pairing every formula with its oracle

class Formula(NamedTuple):
    name: str
    formula: Callable
    oracle: Callable


def _oracle_sd_limit(m, s):
    return count_sD(m, s, stabilization_bounds(m, s, "sD"))


FORMULAS = {f.name: f for f in [
    Formula("B2", lambda m: b_rows_atmost(m, 2), lambda m: count_syt_rows(m, 2)),
    Formula("B3", lambda m: b_rows_atmost(m, 3), lambda m: count_syt_rows(m, 3)),
    Formula("B4", lambda m: b_rows_atmost(m, 4), lambda m: count_syt_rows(m, 4)),
    Formula("B5", lambda m: b_rows_atmost(m, 5), lambda m: count_syt_rows(m, 5)),
    Formula("sB2", sB2, lambda m, s: count_sB(m, s, 2)),
    Formula("sB3", sB3, lambda m, s: count_sB(m, s, 3)),
    Formula("sD2", sD2, lambda u, s: count_sD(2 * u - 1 + s, s, 2)),
    Formula("sD3", sD3, lambda m, s: count_sD(m, s, 3)),
    Formula("D4", lambda n: d45(n, 4), lambda n: count_sD(n, 0, 4)),
    Formula("D5", lambda n: d45(n, 5), lambda n: count_sD(n, 0, 5)),
    Formula("Skt", s_kt, lambda n, k, t: count_syt_rows(n, k, t)),
    Formula("SelbergEven", lambda m, h: selberg(m, 2 * h), lambda m, h: count_syt_rows(m, 2 * h)),
    Formula("SelbergOdd", lambda m, h: selberg(m, 2 * h + 1), lambda m, h: count_syt_rows(m, 2 * h + 1)),
    Formula("S6", selberg_six, lambda m: count_syt_rows(m, 6)),
    Formula("Binfty", b_infty, lambda m: count_sB(m, 0, max(m, 1))),
    Formula("Dinfty", d_infty, lambda m: count_sD(m, 0, stabilization_bounds(m, 0, "D"))),
    Formula("sBinfty", sb_infty, lambda m, s: count_sB(m, s, stabilization_bounds(m, s, "B"))),
    Formula("sDinfty", sd_infty, _oracle_sd_limit),
    Formula("InvCount", involution_count_closed, schensted_fixed_points),
    Formula("Reduction", reduction_values,
            lambda m: {line.name: line.enumerated for line in reduction_corollaries(m)}),
]}
