"""Moment/cumulant conversions through one partition-weighted sum.

All six conversions (moments <-> classical, boolean, free cumulants) are the
same formula with different weight rows: the order-``i`` output is

    sum over partitions mu of i  of  w(i, len(mu) - 1) * d_mu * g_mu

where ``d_mu`` counts set partitions by shape, ``g_mu`` is the product of
input entries over the parts of ``mu``, and ``w`` is a row of factorial
moments selecting the conversion.  Boolean and free conversions carry an
internal ``k! * a_k`` rescaling of inputs and a ``/ i!`` of the output; the
public values are always the unscaled moments ``a_k`` and unscaled cumulants
(in particular *free* cumulants are the plain coefficients ``r_k`` solving
``M(t) = R(t M(t))``, never ``k! r_k``).

Sums are exact and associative, so partition terms may be evaluated in
parallel and combined in any order with bit-identical results.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Literal

from .partitions import Partition, enumerate_partitions, partition_coefficient
from .scalars import (
    Polynomial,
    Scalar,
    as_scalar,
    factorial,
    falling_factorial,
    stirling_first,
    stirling_second,
)

Kind = Literal["classical", "boolean", "free"]
KINDS = ("classical", "boolean", "free")
BASES = ("moments",) + KINDS


def _checked_values(values: Iterable) -> tuple[Scalar, ...]:
    vals = tuple(as_scalar(v) for v in values)
    if not vals:
        raise ValueError("sequences must have order >= 1")
    symbols = {v.symbol for v in vals if isinstance(v, Polynomial)}
    if len(symbols) > 1:
        raise ValueError(f"mixed polynomial symbols in one sequence: {sorted(symbols)}")
    return vals


class MomentSequence:
    """Exact moments a_1..a_n; the zeroth moment is 1 by convention."""

    __slots__ = ("values",)

    def __init__(self, values: Iterable) -> None:
        self.values = _checked_values(values)

    @property
    def order(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, k):
        return self.values[k]

    def __eq__(self, other) -> bool:
        if isinstance(other, MomentSequence):
            return self.values == other.values
        return NotImplemented

    def __repr__(self) -> str:
        return f"MomentSequence({list(self.values)!r})"


class CumulantSequence:
    """Cumulants of one kind, k_1..k_n, same indexing as MomentSequence."""

    __slots__ = ("kind", "values")

    def __init__(self, kind: Kind, values: Iterable) -> None:
        if kind not in KINDS:
            raise ValueError(f"unknown cumulant kind: {kind!r}")
        self.kind = kind
        self.values = _checked_values(values)

    @property
    def order(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, k):
        return self.values[k]

    def __eq__(self, other) -> bool:
        if isinstance(other, CumulantSequence):
            return self.kind == other.kind and self.values == other.values
        return NotImplemented

    def __repr__(self) -> str:
        return f"CumulantSequence({self.kind!r}, {list(self.values)!r})"


@dataclass(frozen=True)
class WeightSpec:
    """One conversion's weight row.

    ``rule(i, j)`` is the j-th factorial moment used at target order ``i``
    (the free rows depend on ``i``, the others do not); ``rule(i, 0)`` is
    always 1.  ``bar`` marks the conversions computed in the k!-rescaled
    sequence domain.
    """

    rule: Callable[[int, int], Scalar]
    bar: bool = False


CLASSICAL_FROM_MOMENTS = WeightSpec(lambda i, j: Fraction((-1) ** j * factorial(j)))
MOMENTS_FROM_CLASSICAL = WeightSpec(lambda i, j: Fraction(1))
BOOLEAN_FROM_MOMENTS = WeightSpec(
    lambda i, j: Fraction((-1) ** j * factorial(j + 1)), bar=True
)
MOMENTS_FROM_BOOLEAN = WeightSpec(lambda i, j: Fraction(factorial(j + 1)), bar=True)
FREE_FROM_MOMENTS = WeightSpec(
    lambda i, j: Fraction(falling_factorial(-i, j)), bar=True
)
MOMENTS_FROM_FREE = WeightSpec(lambda i, j: Fraction(falling_factorial(i, j)), bar=True)


def _term(p: Partition, weight: Scalar, values: tuple[Scalar, ...]) -> Scalar:
    t = weight * partition_coefficient(p)
    for part, mult in p.parts:
        t = t * values[part - 1] ** mult
    return t


def partition_sum(
    i: int,
    weight_of_length: Callable[[int], Scalar],
    values,
    parallel: bool = False,
) -> Scalar:
    """sum over partitions p of i of weight(len(p)) * d_p * prod values[part]^mult.

    The raw sum, with the weight given directly as a function of the number
    of parts; distribution formulas use this form.  Deterministic: terms are
    combined in enumeration order (chunk order when parallel).
    """
    if i < 1:
        raise ValueError("need order i >= 1")
    vals = tuple(values.values if hasattr(values, "values") else values)
    if len(vals) < i:
        raise ValueError(f"sequence of length {len(vals)} too short for order {i}")
    parts_list = enumerate_partitions(i)
    weights = {}
    for p in parts_list:
        if p.length not in weights:
            weights[p.length] = as_scalar(weight_of_length(p.length))

    if parallel and len(parts_list) > 8:
        nchunks = 8
        chunks = [parts_list[c::nchunks] for c in range(nchunks)]
        with ThreadPoolExecutor(max_workers=nchunks) as pool:
            partials = list(
                pool.map(
                    lambda chunk: _sum_terms(chunk, weights, vals),
                    chunks,
                )
            )
        total: Scalar = Fraction(0)
        for s in partials:
            total = total + s
        return total
    return _sum_terms(parts_list, weights, vals)


def _sum_terms(parts_list, weights, vals) -> Scalar:
    total: Scalar = Fraction(0)
    for p in parts_list:
        total = total + _term(p, weights[p.length], vals)
    return total


def partition_transform(
    i: int, w: WeightSpec, g, parallel: bool = False
) -> Scalar:
    """Order-``i`` output of the unified transform with weight row ``w``.

    ``g`` supplies at least ``i`` input entries (a MomentSequence,
    CumulantSequence, or plain iterable of scalars).  For ``bar`` rows the
    inputs are rescaled by k! and the result divided by i! internally.
    """
    vals = tuple(g.values if hasattr(g, "values") else g)
    if len(vals) < i:
        raise ValueError(f"sequence of length {len(vals)} too short for order {i}")
    if w.bar:
        vals = tuple(factorial(k + 1) * as_scalar(v) for k, v in enumerate(vals[:i]))
    result = partition_sum(i, lambda nu: w.rule(i, nu - 1), vals, parallel=parallel)
    if w.bar:
        result = result / factorial(i)
    return result


def _require_kind(c, kind: Kind):
    if isinstance(c, CumulantSequence):
        if c.kind != kind:
            raise ValueError(f"expected {kind} cumulants, got {c.kind}")
        return c.values
    if isinstance(c, MomentSequence):
        raise ValueError(f"expected {kind} cumulants, got a moment sequence")
    return _checked_values(c)


def _require_moments(m):
    if isinstance(m, CumulantSequence):
        raise ValueError(f"expected moments, got {m.kind} cumulants")
    return _checked_values(m.values if hasattr(m, "values") else m)


def classical_cumulants_from_moments(m, parallel: bool = False) -> CumulantSequence:
    vals = _require_moments(m)
    out = [
        partition_transform(i, CLASSICAL_FROM_MOMENTS, vals, parallel)
        for i in range(1, len(vals) + 1)
    ]
    return CumulantSequence("classical", out)


def moments_from_classical_cumulants(c, parallel: bool = False) -> MomentSequence:
    vals = _require_kind(c, "classical")
    out = [
        partition_transform(i, MOMENTS_FROM_CLASSICAL, vals, parallel)
        for i in range(1, len(vals) + 1)
    ]
    return MomentSequence(out)


def boolean_cumulants_from_moments(m, parallel: bool = False) -> CumulantSequence:
    vals = _require_moments(m)
    out = [
        partition_transform(i, BOOLEAN_FROM_MOMENTS, vals, parallel)
        for i in range(1, len(vals) + 1)
    ]
    return CumulantSequence("boolean", out)


def moments_from_boolean_cumulants(h, parallel: bool = False) -> MomentSequence:
    vals = _require_kind(h, "boolean")
    out = [
        partition_transform(i, MOMENTS_FROM_BOOLEAN, vals, parallel)
        for i in range(1, len(vals) + 1)
    ]
    return MomentSequence(out)


def free_cumulants_from_moments(m, parallel: bool = False) -> CumulantSequence:
    vals = _require_moments(m)
    out = [
        partition_transform(i, FREE_FROM_MOMENTS, vals, parallel)
        for i in range(1, len(vals) + 1)
    ]
    return CumulantSequence("free", out)


def moments_from_free_cumulants(r, parallel: bool = False) -> MomentSequence:
    vals = _require_kind(r, "free")
    out = [
        partition_transform(i, MOMENTS_FROM_FREE, vals, parallel)
        for i in range(1, len(vals) + 1)
    ]
    return MomentSequence(out)


def factorial_moments_from_moments(m) -> tuple[Scalar, ...]:
    """Change of basis a_(i) = sum_k s(i,k) a_k (signed first kind)."""
    vals = _require_moments(m)
    out = []
    for i in range(1, len(vals) + 1):
        acc: Scalar = Fraction(0)
        for k in range(1, i + 1):
            acc = acc + stirling_first(i, k) * vals[k - 1]
        out.append(acc)
    return tuple(out)


def moments_from_factorial_moments(f) -> MomentSequence:
    """Inverse basis change a_i = sum_k S(i,k) a_(k) (second kind)."""
    vals = _checked_values(f.values if hasattr(f, "values") else f)
    out = []
    for i in range(1, len(vals) + 1):
        acc: Scalar = Fraction(0)
        for k in range(1, i + 1):
            acc = acc + stirling_second(i, k) * vals[k - 1]
        out.append(acc)
    return MomentSequence(out)


_FROM_MOMENTS = {
    "classical": classical_cumulants_from_moments,
    "boolean": boolean_cumulants_from_moments,
    "free": free_cumulants_from_moments,
}
_TO_MOMENTS = {
    "classical": moments_from_classical_cumulants,
    "boolean": moments_from_boolean_cumulants,
    "free": moments_from_free_cumulants,
}


def convert(
    from_kind: str,
    to_kind: str,
    values,
    order: int | None = None,
    parallel: bool = False,
) -> tuple[Scalar, ...]:
    """Convert between any two of {moments, classical, boolean, free}.

    Cross-kind conversions are composed through the moment basis.  ``order``
    truncates the input (it must not exceed the input length).
    """
    if from_kind not in BASES or to_kind not in BASES:
        raise ValueError(f"unknown sequence kind: {from_kind!r} -> {to_kind!r}")
    vals = _checked_values(values.values if hasattr(values, "values") else values)
    if order is not None:
        if order < 1 or order > len(vals):
            raise ValueError(f"order {order} out of range for length {len(vals)}")
        vals = vals[:order]
    if from_kind == to_kind:
        return vals
    if from_kind == "moments":
        moments = vals
    else:
        moments = _TO_MOMENTS[from_kind](
            CumulantSequence(from_kind, vals), parallel
        ).values
    if to_kind == "moments":
        return moments
    return _FROM_MOMENTS[to_kind](moments, parallel).values
