"""Benchmark the free-cumulants-from-moments transform across orders.

For each requested order ``i`` the timed unit is the order-``i`` partition
transform itself (one pass over the p(i) partitions of ``i``), which is the
hardware-independent cost driver; the reported ``terms`` column is p(i).
Inputs are either the rational sequence m_k = 1/k or the symbolic
Marchenko-Pastur moments in one indeterminate.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass
from fractions import Fraction

from .distributions import marchenko_pastur_moments
from .partitions import enumerate_partitions
from .scalars import variable
from .transforms import FREE_FROM_MOMENTS, partition_transform

INPUT_KINDS = ("rational", "symbolic")


@dataclass
class BenchRow:
    order: int
    terms: int
    median_ms: float


def run_bench(
    orders, repetitions: int = 5, input_kind: str = "rational"
) -> list[BenchRow]:
    orders = list(orders)
    if not orders:
        raise ValueError("bench needs at least one order")
    if any(not isinstance(i, int) or i < 1 for i in orders):
        raise ValueError(f"orders must be positive integers: {orders}")
    if not isinstance(repetitions, int) or repetitions < 1:
        raise ValueError(f"repetitions must be >= 1, got {repetitions!r}")
    if input_kind not in INPUT_KINDS:
        raise ValueError(f"input must be one of {INPUT_KINDS}, got {input_kind!r}")
    rows = []
    for i in orders:
        if input_kind == "rational":
            seq = tuple(Fraction(1, k) for k in range(1, i + 1))
        else:
            seq = marchenko_pastur_moments(variable("lambda"), i).values
        samples = []
        for _ in range(repetitions):
            start = time.perf_counter()
            partition_transform(i, FREE_FROM_MOMENTS, seq)
            samples.append(time.perf_counter() - start)
        rows.append(
            BenchRow(
                order=i,
                terms=len(enumerate_partitions(i)),
                median_ms=statistics.median(samples) * 1000.0,
            )
        )
    return rows
