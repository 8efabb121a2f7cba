"""Exact moment sequences for nine classical and free laws.

Each generator returns a :class:`MomentSequence` whose entries are exact
scalars; parameters may be symbolic (a polynomial in one indeterminate)
wherever the closed form stays inside the polynomial ring.  Two conventions
to note: the exponential law uses a_i = i!/lambda^i (rate parameter), and
the Gaussian is parameterized by the variance sigma2, not its square root,
so symbolic-variance moments need no radicals.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .scalars import (
    Polynomial,
    Scalar,
    as_scalar,
    factorial,
    falling_factorial,
    stirling_second,
    variable,
)
from .transforms import CumulantSequence, MomentSequence, moments_from_free_cumulants, partition_sum


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def poisson_moments(lam: Scalar, order: int) -> MomentSequence:
    """a_i = sum_k S(i,k) lambda^k."""
    lam = as_scalar(lam)
    _check_order(order)
    out = []
    for i in range(1, order + 1):
        acc: Scalar = Fraction(0)
        for k in range(1, i + 1):
            acc = acc + stirling_second(i, k) * lam**k
        out.append(acc)
    return MomentSequence(out)


def compound_poisson_moments(lam: Scalar, inner, order: int) -> MomentSequence:
    """Random sum with Poisson count: partition sum weighted by lambda^(#parts)."""
    lam = as_scalar(lam)
    _check_order(order)
    vals = tuple(inner.values if hasattr(inner, "values") else inner)
    if len(vals) < order:
        raise ValueError(f"inner sequence of length {len(vals)} too short for order {order}")
    out = [partition_sum(i, lambda nu: lam**nu, vals) for i in range(1, order + 1)]
    return MomentSequence(out)


def exponential_moments(lam, order: int) -> MomentSequence:
    """a_i = i! / lambda^i for a nonzero rational rate."""
    _check_order(order)
    if isinstance(lam, Polynomial):
        raise ValueError("exponential rate must be rational (moments live in 1/lambda)")
    lam = Fraction(lam)
    if lam == 0:
        raise ValueError("exponential rate must be nonzero")
    return MomentSequence(
        [Fraction(factorial(i)) / lam**i for i in range(1, order + 1)]
    )


def uniform_moments(a: Scalar, b: Scalar, order: int) -> MomentSequence:
    """a_i = sum_j C(i,j) a^(i-j) (b-a)^j / (j+1); a = b degenerates to a point mass."""
    a = as_scalar(a)
    b = as_scalar(b)
    _check_order(order)
    span = b - a
    out = []
    for i in range(1, order + 1):
        acc: Scalar = Fraction(0)
        for j in range(0, i + 1):
            term = math.comb(i, j) * a ** (i - j) * span**j
            acc = acc + term / (j + 1)
        out.append(acc)
    return MomentSequence(out)


def bernoulli_moments(p: Scalar, order: int) -> MomentSequence:
    """All moments equal p."""
    p = as_scalar(p)
    _check_order(order)
    return MomentSequence([p] * order)


def binomial_moments(n_trials: int, p: Scalar, order: int) -> MomentSequence:
    """Sum of n i.i.d. Bernoullis: partition sum with weight (n)_(#parts)."""
    if not isinstance(n_trials, int) or n_trials < 1:
        raise ValueError(f"binomial needs a concrete positive integer n, got {n_trials!r}")
    p = as_scalar(p)
    _check_order(order)
    ones = (p,) * order
    out = [
        partition_sum(i, lambda nu: Fraction(falling_factorial(n_trials, nu)), ones)
        for i in range(1, order + 1)
    ]
    return MomentSequence(out)


def gaussian_moments(mu: Scalar, sigma2: Scalar, order: int) -> MomentSequence:
    """a_n = sum_k (sigma2/2)^k (n)_(2k)/k! mu^(n-2k)."""
    mu = as_scalar(mu)
    sigma2 = as_scalar(sigma2)
    _check_order(order)
    half_var = sigma2 / 2
    out = []
    for n in range(1, order + 1):
        acc: Scalar = Fraction(0)
        for k in range(0, n // 2 + 1):
            coeff = Fraction(falling_factorial(n, 2 * k), factorial(k))
            acc = acc + coeff * half_var**k * mu ** (n - 2 * k)
        out.append(acc)
    return MomentSequence(out)


def wigner_moments(order: int) -> MomentSequence:
    """Odd moments 0, even moments the Catalan numbers."""
    _check_order(order)
    out: list[Scalar] = []
    for i in range(1, order + 1):
        out.append(Fraction(catalan(i // 2)) if i % 2 == 0 else Fraction(0))
    return MomentSequence(out)


def marchenko_pastur_moments(lam: Scalar, order: int) -> MomentSequence:
    """The law whose free cumulants all equal lambda."""
    lam = as_scalar(lam)
    _check_order(order)
    return moments_from_free_cumulants(CumulantSequence("free", [lam] * order))


def _check_order(order: int) -> None:
    if not isinstance(order, int) or order < 1:
        raise ValueError(f"order must be a positive integer, got {order!r}")


DISTRIBUTIONS = {
    "poisson": ("lambda",),
    "compound_poisson": ("lambda",),
    "exponential": ("lambda",),
    "uniform": ("a", "b"),
    "bernoulli": ("p",),
    "binomial": ("n", "p"),
    "gaussian": ("mu", "sigma2"),
    "wigner": (),
    "marchenko_pastur": ("lambda",),
}


def distribution_moments(
    name: str, params: dict[str, Scalar], order: int, inner=None
) -> MomentSequence:
    """Dispatch by distribution name with named parameters.

    ``params`` maps parameter names to scalars (symbolic allowed where the
    generator supports it); ``inner`` is the inner moment sequence of the
    compound Poisson law and is rejected elsewhere.
    """
    if name not in DISTRIBUTIONS:
        raise ValueError(f"unknown distribution: {name!r}")
    wanted = DISTRIBUTIONS[name]
    missing = [k for k in wanted if k not in params]
    extra = [k for k in params if k not in wanted]
    if missing or extra:
        raise ValueError(
            f"{name} takes parameters {list(wanted)}; missing {missing}, unknown {extra}"
        )
    if inner is not None and name != "compound_poisson":
        raise ValueError(f"{name} takes no inner sequence")
    if name == "poisson":
        return poisson_moments(params["lambda"], order)
    if name == "compound_poisson":
        if inner is None:
            raise ValueError("compound_poisson needs an inner moment sequence")
        return compound_poisson_moments(params["lambda"], inner, order)
    if name == "exponential":
        return exponential_moments(params["lambda"], order)
    if name == "uniform":
        return uniform_moments(params["a"], params["b"], order)
    if name == "bernoulli":
        return bernoulli_moments(params["p"], order)
    if name == "binomial":
        n = params["n"]
        if isinstance(n, Fraction) and n.denominator == 1:
            n = int(n)
        if not isinstance(n, int):
            raise ValueError("binomial n must be a concrete positive integer")
        return binomial_moments(n, params["p"], order)
    if name == "gaussian":
        return gaussian_moments(params["mu"], params["sigma2"], order)
    if name == "wigner":
        return wigner_moments(order)
    return marchenko_pastur_moments(params["lambda"], order)


def symbolic_param(name: str) -> Polynomial:
    """The symbolic value of a parameter: the indeterminate named after it."""
    return variable(name)


def table_rows(name: str, max_order: int):
    """Rows of the two reference tables, orders 1..max_order.

    ``wigner_catalan`` rows are (i, wigner moment, catalan number); the
    ``marchenko_pastur`` rows are (i, symbolic moment in lambda, None).
    """
    _check_order(max_order)
    if name == "wigner_catalan":
        w = wigner_moments(max_order)
        return [(i, w[i - 1], catalan(i)) for i in range(1, max_order + 1)]
    if name == "marchenko_pastur":
        mp = marchenko_pastur_moments(variable("lambda"), max_order)
        return [(i, mp[i - 1], None) for i in range(1, max_order + 1)]
    raise ValueError(f"unknown table: {name!r}")
