"""Exact scalar arithmetic and combinatorial number functions.

A *scalar* is either a ``fractions.Fraction`` (arbitrary-precision rational,
always in lowest terms with positive denominator) or a :class:`Polynomial`
(univariate, rational coefficients).  Every operation is exact; nothing here
ever touches floating point.  All values are immutable, so they can be shared
freely across threads.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Union

factorial = math.factorial

Scalar = Union[Fraction, "Polynomial"]

_SYMBOL_RE = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")


def rational_str(q: Fraction) -> str:
    """Canonical text form: "p/q", or plain "p" when the denominator is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _demote(symbol: str, coeffs: list[Fraction]) -> Scalar:
    # constants never survive as Polynomial values: degree-0 results become
    # plain Fractions so equality between scalar kinds stays unambiguous
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        return Fraction(0)
    if len(coeffs) == 1:
        return coeffs[0]
    return Polynomial(symbol, coeffs)


class Polynomial:
    """Dense univariate polynomial over exact rationals.

    ``coeffs[k]`` is the coefficient of degree ``k``; trailing zeros are
    stripped on construction, so equality is coefficient-wise comparison of
    canonical forms.  Arithmetic accepts ints and Fractions (promoted to
    constants) and other polynomials in the *same* symbol; mixing two symbols
    raises ``ValueError``.  Any operation whose result is constant returns a
    ``Fraction`` rather than a degree-0 polynomial.
    """

    __slots__ = ("symbol", "coeffs")

    def __init__(self, symbol: str, coeffs) -> None:
        if not _SYMBOL_RE.match(symbol):
            raise ValueError(f"invalid polynomial symbol: {symbol!r}")
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.symbol = symbol
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.symbol != self.symbol:
                raise ValueError(
                    f"polynomial symbol mismatch: {self.symbol!r} vs {other.symbol!r}"
                )
            return other.coeffs
        if isinstance(other, (int, Fraction)):
            return (Fraction(other),)
        return None

    def __add__(self, other):
        cs = self._coerce(other)
        if cs is None:
            return NotImplemented
        n = max(len(self.coeffs), len(cs))
        out = [Fraction(0)] * n
        for k, c in enumerate(self.coeffs):
            out[k] += c
        for k, c in enumerate(cs):
            out[k] += c
        return _demote(self.symbol, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.symbol, [-c for c in self.coeffs])

    def __sub__(self, other):
        cs = self._coerce(other)
        if cs is None:
            return NotImplemented
        n = max(len(self.coeffs), len(cs))
        out = [Fraction(0)] * n
        for k, c in enumerate(self.coeffs):
            out[k] += c
        for k, c in enumerate(cs):
            out[k] -= c
        return _demote(self.symbol, out)

    def __rsub__(self, other):
        neg = self.__neg__()
        return neg.__add__(other)

    def __mul__(self, other):
        cs = self._coerce(other)
        if cs is None:
            return NotImplemented
        if not self.coeffs or not cs:
            return Fraction(0)
        out = [Fraction(0)] * (len(self.coeffs) + len(cs) - 1)
        for j, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for k, b in enumerate(cs):
                out[j + k] += a * b
        return _demote(self.symbol, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # division by a nonzero rational only; the coefficient ring is a field
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("division of polynomial by zero")
        q = Fraction(other)
        return Polynomial(self.symbol, [c / q for c in self.coeffs])

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial power must be a nonnegative integer")
        result: Scalar = Fraction(1)
        for _ in range(n):
            result = self * result
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.symbol == other.symbol and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            # canonical polynomials have degree >= 1 except the zero/constant
            # forms that can be built directly
            if not self.coeffs:
                return other == 0
            return len(self.coeffs) == 1 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.symbol, self.coeffs))

    def evaluate(self, x: Fraction) -> Fraction:
        """Horner evaluation at an exact rational point."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        # canonical ASCII form: descending degree, explicit "^" and "*",
        # e.g. "lambda^2+lambda" or "x^3-1/2*x"
        if not self.coeffs:
            return "0"
        parts = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if d == 0:
                body = rational_str(mag)
            else:
                base = self.symbol if d == 1 else f"{self.symbol}^{d}"
                body = base if mag == 1 else f"{rational_str(mag)}*{base}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = (first_sign if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += sign + body
        return text

    def __repr__(self) -> str:
        return f"Polynomial({self.symbol!r}, [{', '.join(map(str, self.coeffs))}])"


def variable(symbol: str) -> Polynomial:
    """The monomial ``symbol`` itself (degree 1, coefficient 1)."""
    return Polynomial(symbol, (0, 1))


def as_scalar(x) -> Scalar:
    """Normalize ints to Fractions; pass Fractions and Polynomials through."""
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    raise TypeError(f"not a scalar: {x!r}")


def scalar_symbol(x: Scalar) -> str | None:
    """The indeterminate of a polynomial scalar, else None."""
    return x.symbol if isinstance(x, Polynomial) else None


def falling_factorial(x: int, k: int) -> int:
    """x(x-1)...(x-k+1); the empty product (k = 0) is 1."""
    if k < 0:
        raise ValueError("falling factorial needs k >= 0")
    out = 1
    for j in range(k):
        out *= x - j
    return out


@lru_cache(maxsize=None)
def _stirling1_row(i: int) -> tuple[int, ...]:
    # signed first kind: s(n,k) = s(n-1,k-1) - (n-1)*s(n-1,k), s(0,0) = 1
    row = (1,)
    for n in range(1, i + 1):
        prev = row
        row = tuple(
            (prev[k - 1] if k >= 1 else 0) - (n - 1) * (prev[k] if k < n else 0)
            for k in range(n + 1)
        )
    return row


@lru_cache(maxsize=None)
def _stirling2_row(i: int) -> tuple[int, ...]:
    # second kind: S(n,k) = S(n-1,k-1) + k*S(n-1,k), S(0,0) = 1
    row = (1,)
    for n in range(1, i + 1):
        prev = row
        row = tuple(
            (prev[k - 1] if k >= 1 else 0) + k * (prev[k] if k < n else 0)
            for k in range(n + 1)
        )
    return row


def stirling_first(i: int, k: int) -> int:
    """Signed Stirling number of the first kind s(i, k)."""
    if i < 1 or not 1 <= k <= i:
        raise ValueError(f"stirling_first needs 1 <= k <= i, got i={i}, k={k}")
    return _stirling1_row(i)[k]


def stirling_second(i: int, k: int) -> int:
    """Stirling number of the second kind S(i, k)."""
    if i < 1 or not 1 <= k <= i:
        raise ValueError(f"stirling_second needs 1 <= k <= i, got i={i}, k={k}")
    return _stirling2_row(i)[k]
