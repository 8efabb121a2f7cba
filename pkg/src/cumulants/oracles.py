"""Slow, independent reference implementations used for verification.

Everything here computes by direct enumeration (set partitions, non-crossing
partitions, ordered compositions) or by truncated power-series algebra, with
no shared code with the production partition transform.  Enumeration is
capped at n = 10; these exist to certify small instances, not to be fast.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .scalars import Scalar, as_scalar

MAX_ENUM = 10

SetPartition = tuple[tuple[int, ...], ...]


def bell_number(n: int) -> int:
    """Bell numbers by the Bell-triangle recursion (independent of Stirling rows)."""
    if n < 0:
        raise ValueError("need n >= 0")
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def catalan_number(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def _check_enum_range(n: int) -> None:
    if not 1 <= n <= MAX_ENUM:
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_ENUM}, got {n}")


@lru_cache(maxsize=None)
def enumerate_set_partitions(n: int) -> tuple[SetPartition, ...]:
    """All partitions of {1..n} into blocks, each block a sorted tuple."""
    _check_enum_range(n)
    out: list[SetPartition] = []
    state: list[list[int]] = []

    def place(k: int) -> None:
        if k > n:
            out.append(tuple(tuple(b) for b in state))
            return
        for b in state:
            b.append(k)
            place(k + 1)
            b.pop()
        state.append([k])
        place(k + 1)
        state.pop()

    place(1)
    return tuple(out)


def is_noncrossing(blocks: SetPartition) -> bool:
    """No a < b < c < d with a,c in one block and b,d in another."""
    owner = {}
    for idx, b in enumerate(blocks):
        for x in b:
            owner[x] = idx
    for i, b1 in enumerate(blocks):
        for b2 in blocks[i + 1 :]:
            # crossing iff the merged order alternates b1,b2,b1,b2 or b2,b1,b2,b1
            merged = sorted(b1 + b2)
            labels = [owner[x] for x in merged]
            switches = sum(1 for a, b in zip(labels, labels[1:]) if a != b)
            if switches >= 3:
                return False
    return True


@lru_cache(maxsize=None)
def enumerate_noncrossing_partitions(n: int) -> tuple[SetPartition, ...]:
    _check_enum_range(n)
    return tuple(p for p in enumerate_set_partitions(n) if is_noncrossing(p))


def enumerate_compositions(n: int) -> list[tuple[int, ...]]:
    """All ordered tuples of positive integers summing to n (2^(n-1) of them)."""
    _check_enum_range(n)
    out: list[tuple[int, ...]] = []

    def build(remaining: int, prefix: tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(prefix)
            return
        for first in range(1, remaining + 1):
            build(remaining - first, prefix + (first,))

    build(n, ())
    return out


def _values(seq) -> tuple[Scalar, ...]:
    return tuple(as_scalar(v) for v in (seq.values if hasattr(seq, "values") else seq))


def oracle_classical_cumulant(m, i: int) -> Scalar:
    """kappa_i by direct sum over set partitions with Moebius weight."""
    vals = _values(m)
    _check_enum_range(i)
    if len(vals) < i:
        raise ValueError("sequence too short")
    total: Scalar = Fraction(0)
    for blocks in enumerate_set_partitions(i):
        nu = len(blocks)
        term: Scalar = Fraction((-1) ** (nu - 1) * math.factorial(nu - 1))
        for b in blocks:
            term = term * vals[len(b) - 1]
        total = total + term
    return total


def oracle_classical_moment(c, i: int) -> Scalar:
    """m_i as the plain sum over set partitions of products of cumulants."""
    vals = _values(c)
    _check_enum_range(i)
    if len(vals) < i:
        raise ValueError("sequence too short")
    total: Scalar = Fraction(0)
    for blocks in enumerate_set_partitions(i):
        term: Scalar = Fraction(1)
        for b in blocks:
            term = term * vals[len(b) - 1]
        total = total + term
    return total


def oracle_boolean_cumulant(m, i: int) -> Scalar:
    """h_i by alternating sum over ordered compositions."""
    vals = _values(m)
    _check_enum_range(i)
    if len(vals) < i:
        raise ValueError("sequence too short")
    total: Scalar = Fraction(0)
    for comp in enumerate_compositions(i):
        term: Scalar = Fraction((-1) ** (len(comp) - 1))
        for c in comp:
            term = term * vals[c - 1]
        total = total + term
    return total


def oracle_boolean_moment(h, i: int) -> Scalar:
    """a_i as the plain sum over ordered compositions of products of h's."""
    vals = _values(h)
    _check_enum_range(i)
    if len(vals) < i:
        raise ValueError("sequence too short")
    total: Scalar = Fraction(0)
    for comp in enumerate_compositions(i):
        term: Scalar = Fraction(1)
        for c in comp:
            term = term * vals[c - 1]
        total = total + term
    return total


def oracle_free_moment(r, i: int) -> Scalar:
    """m_i as the sum over non-crossing partitions of products of r's."""
    vals = _values(r)
    _check_enum_range(i)
    if len(vals) < i:
        raise ValueError("sequence too short")
    total: Scalar = Fraction(0)
    for blocks in enumerate_noncrossing_partitions(i):
        term: Scalar = Fraction(1)
        for b in blocks:
            term = term * vals[len(b) - 1]
        total = total + term
    return total


# -- truncated power series ------------------------------------------------
#
# A series is a plain list/tuple of scalars c[0..n].  All operations below
# are exact on the truncation.


def series_mul(a, b, order: int) -> list[Scalar]:
    out: list[Scalar] = [Fraction(0)] * (order + 1)
    for j, x in enumerate(a[: order + 1]):
        if x == 0:
            continue
        for k, y in enumerate(b[: order + 1 - j]):
            out[j + k] = out[j + k] + x * y
    return out


def series_reciprocal(c) -> list[Scalar]:
    """1/c for a series with constant term 1."""
    c = list(c)
    if c[0] != 1:
        raise ValueError("reciprocal needs constant term 1")
    n = len(c) - 1
    out: list[Scalar] = [Fraction(1)] + [Fraction(0)] * n
    for k in range(1, n + 1):
        acc: Scalar = Fraction(0)
        for j in range(1, k + 1):
            acc = acc + c[j] * out[k - j]
        out[k] = -acc
    return out


def series_log(c) -> list[Scalar]:
    """log of a series with constant term 1 (result has constant term 0)."""
    c = list(c)
    if c[0] != 1:
        raise ValueError("log needs constant term 1")
    n = len(c) - 1
    out: list[Scalar] = [Fraction(0)] * (n + 1)
    for k in range(1, n + 1):
        acc: Scalar = Fraction(k) * c[k]
        for j in range(1, k):
            acc = acc - Fraction(j) * out[j] * c[k - j]
        out[k] = acc / k
    return out


def series_exp(c) -> list[Scalar]:
    """exp of a series with constant term 0 (result has constant term 1)."""
    c = list(c)
    if c[0] != 0:
        raise ValueError("exp needs constant term 0")
    n = len(c) - 1
    out: list[Scalar] = [Fraction(1)] + [Fraction(0)] * n
    for k in range(1, n + 1):
        acc: Scalar = Fraction(0)
        for j in range(1, k + 1):
            acc = acc + Fraction(j) * c[j] * out[k - j]
        out[k] = acc / k
    return out


def series_free_fixed_point(r) -> list[Scalar]:
    """Solve M(t) = R(t M(t)) for M given R = 1 + r_1 t + ...

    Iterates M <- R(t M) from M = 1; each pass fixes one more coefficient,
    so n iterations suffice on a truncation to order n.
    """
    r = list(r)
    if r[0] != 1:
        raise ValueError("fixed point needs constant term 1")
    n = len(r) - 1
    m: list[Scalar] = [Fraction(1)] + [Fraction(0)] * n
    for _ in range(n):
        tm = [Fraction(0)] + m[:n]  # t * M(t)
        new: list[Scalar] = [Fraction(1)] + [Fraction(0)] * n
        power = [Fraction(1)] + [Fraction(0)] * n  # (tM)^k
        for k in range(1, n + 1):
            power = series_mul(power, tm, n)
            if r[k] == 0:
                continue
            for idx in range(k, n + 1):
                new[idx] = new[idx] + r[k] * power[idx]
        m = new
    return m


def series_free_cumulants(m) -> list[Scalar]:
    """Solve M(t) = R(t M(t)) for R given M: triangular, one r_i at a time."""
    m = list(m)
    if m[0] != 1:
        raise ValueError("needs constant term 1")
    n = len(m) - 1
    tm = [Fraction(0)] + m[:n]
    powers = [[Fraction(1)] + [Fraction(0)] * n]  # (tM)^0 .. (tM)^n
    for _ in range(n):
        powers.append(series_mul(powers[-1], tm, n))
    r: list[Scalar] = [Fraction(1)] + [Fraction(0)] * n
    for i in range(1, n + 1):
        acc: Scalar = m[i]
        for k in range(1, i):
            acc = acc - r[k] * powers[k][i]
        # [t^i] (tM)^i = 1, so r_i is read off directly
        r[i] = acc
    return r


# -- series-based conversions (second, independent oracle family) ----------


def series_classical_cumulants(m) -> list[Scalar]:
    """Classical cumulants via log of the exponential generating function."""
    vals = _values(m)
    n = len(vals)
    egf = [Fraction(1)] + [v / math.factorial(k + 1) for k, v in enumerate(vals)]
    logs = series_log(egf)
    return [math.factorial(k) * logs[k] for k in range(1, n + 1)]


def series_classical_moments(c) -> list[Scalar]:
    vals = _values(c)
    n = len(vals)
    lg = [Fraction(0)] + [v / math.factorial(k + 1) for k, v in enumerate(vals)]
    egf = series_exp(lg)
    return [math.factorial(k) * egf[k] for k in range(1, n + 1)]


def series_boolean_cumulants(m) -> list[Scalar]:
    """Boolean cumulants via H = 1 - 1/M on ordinary generating functions."""
    vals = _values(m)
    recip = series_reciprocal([Fraction(1)] + list(vals))
    return [-x for x in recip[1:]]


def series_boolean_moments(h) -> list[Scalar]:
    vals = _values(h)
    one_minus_h = [Fraction(1)] + [-v for v in vals]
    return series_reciprocal(one_minus_h)[1:]


def series_free_moments(r) -> list[Scalar]:
    vals = _values(r)
    return series_free_fixed_point([Fraction(1)] + list(vals))[1:]


def series_free_cumulants_from_moments(m) -> list[Scalar]:
    vals = _values(m)
    return series_free_cumulants([Fraction(1)] + list(vals))[1:]
