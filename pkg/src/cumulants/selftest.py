"""Self-verification suites: oracle equivalence and round-trip identities.

Runs the production transforms against the enumeration and series oracles on
deterministic pseudo-random rational inputs, plus the counting and basis
identities.  Stops at the first failing suite and reports the counterexample.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import oracles, transforms
from .partitions import enumerate_partitions
from .scalars import stirling_second

MAX_SELFTEST_ORDER = 10


@dataclass
class SuiteResult:
    name: str
    cases: int


@dataclass
class SelftestReport:
    max_order: int
    suites: list[SuiteResult] = field(default_factory=list)
    failure: str | None = None

    @property
    def passed(self) -> bool:
        return self.failure is None

    @property
    def total_cases(self) -> int:
        return sum(s.cases for s in self.suites)


def _random_rationals(rng: random.Random, n: int) -> list[Fraction]:
    return [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(n)]


def _suite_counting(max_order: int, rng) -> tuple[int, str | None]:
    cases = 0
    for n in range(1, max_order + 1):
        sps = oracles.enumerate_set_partitions(n)
        if len(sps) != oracles.bell_number(n):
            return cases, f"|set partitions({n})| = {len(sps)} != Bell({n})"
        ncs = oracles.enumerate_noncrossing_partitions(n)
        if len(ncs) != oracles.catalan_number(n):
            return cases, f"|noncrossing({n})| = {len(ncs)} != Catalan({n})"
        parts = enumerate_partitions(n)
        if len(parts) != len(set(parts)):
            return cases, f"duplicate partitions of {n}"
        if any(p.target != n for p in parts):
            return cases, f"partition of wrong target for n={n}"
        cases += 4
    return cases, None


def _suite_round_trip(max_order: int, rng) -> tuple[int, str | None]:
    cases = 0
    for kind in transforms.KINDS:
        for _ in range(5):
            m = _random_rationals(rng, max_order)
            back = transforms.convert(kind, "moments", transforms.convert("moments", kind, m))
            if list(back) != m:
                return cases, f"moments->{kind}->moments changed {m} into {list(back)}"
            cases += 1
    return cases, None


def _suite_oracle_classical(max_order: int, rng) -> tuple[int, str | None]:
    cases = 0
    for _ in range(3):
        m = _random_rationals(rng, max_order)
        kappa = transforms.classical_cumulants_from_moments(m)
        mom = transforms.moments_from_classical_cumulants(kappa)
        for i in range(1, max_order + 1):
            want = oracles.oracle_classical_cumulant(m, i)
            if kappa[i - 1] != want:
                return cases, f"classical cumulant {i} of {m}: {kappa[i-1]} != {want}"
            want_m = oracles.oracle_classical_moment(kappa, i)
            if mom[i - 1] != want_m:
                return cases, f"classical moment {i}: {mom[i-1]} != {want_m}"
            cases += 2
    return cases, None


def _suite_oracle_boolean(max_order: int, rng) -> tuple[int, str | None]:
    cases = 0
    for _ in range(3):
        m = _random_rationals(rng, max_order)
        h = transforms.boolean_cumulants_from_moments(m)
        mom = transforms.moments_from_boolean_cumulants(h)
        for i in range(1, max_order + 1):
            want = oracles.oracle_boolean_cumulant(m, i)
            if h[i - 1] != want:
                return cases, f"boolean cumulant {i} of {m}: {h[i-1]} != {want}"
            want_m = oracles.oracle_boolean_moment(h, i)
            if mom[i - 1] != want_m:
                return cases, f"boolean moment {i}: {mom[i-1]} != {want_m}"
            cases += 2
    return cases, None


def _suite_oracle_free(max_order: int, rng) -> tuple[int, str | None]:
    cases = 0
    for _ in range(3):
        r = _random_rationals(rng, max_order)
        mom = transforms.moments_from_free_cumulants(transforms.CumulantSequence("free", r))
        for i in range(1, max_order + 1):
            want = oracles.oracle_free_moment(r, i)
            if mom[i - 1] != want:
                return cases, f"free moment {i} of {r}: {mom[i-1]} != {want}"
            cases += 1
        back = transforms.free_cumulants_from_moments(mom)
        if list(back) != r:
            return cases, f"free cumulants of NC moments of {r} came back as {list(back)}"
        cases += 1
    return cases, None


def _suite_series(max_order: int, rng) -> tuple[int, str | None]:
    cases = 0
    for _ in range(3):
        m = _random_rationals(rng, max_order)
        pairs = [
            ("classical", transforms.classical_cumulants_from_moments(m).values,
             oracles.series_classical_cumulants(m)),
            ("boolean", transforms.boolean_cumulants_from_moments(m).values,
             oracles.series_boolean_cumulants(m)),
            ("free", transforms.free_cumulants_from_moments(m).values,
             oracles.series_free_cumulants_from_moments(m)),
        ]
        for kind, got, want in pairs:
            if list(got) != list(want):
                return cases, f"series {kind} mismatch on {m}: {list(got)} != {list(want)}"
            cases += 1
        r = _random_rationals(rng, max_order)
        got = transforms.moments_from_free_cumulants(
            transforms.CumulantSequence("free", r)
        ).values
        want = oracles.series_free_moments(r)
        if list(got) != list(want):
            return cases, f"series free moments mismatch on {r}"
        cases += 1
    return cases, None


def _suite_stirling_basis(max_order: int, rng) -> tuple[int, str | None]:
    cases = 0
    for _ in range(5):
        m = _random_rationals(rng, max_order)
        back = transforms.moments_from_factorial_moments(
            transforms.factorial_moments_from_moments(m)
        )
        if list(back) != m:
            return cases, f"stirling basis round trip changed {m}"
        cases += 1
    # row sums of the second kind are the Bell numbers
    for i in range(1, max_order + 1):
        total = sum(stirling_second(i, k) for k in range(1, i + 1))
        if total != oracles.bell_number(i):
            return cases, f"stirling row sum {i}: {total} != Bell({i})"
        cases += 1
    return cases, None


_SUITES = (
    ("counting", _suite_counting),
    ("round_trip", _suite_round_trip),
    ("oracle_classical", _suite_oracle_classical),
    ("oracle_boolean", _suite_oracle_boolean),
    ("oracle_free", _suite_oracle_free),
    ("series", _suite_series),
    ("stirling_basis", _suite_stirling_basis),
)


def run_selftest(max_order: int = 8, seed: int = 20201) -> SelftestReport:
    """Run every suite up to ``max_order`` (capped at 10); deterministic."""
    if not isinstance(max_order, int) or not 1 <= max_order <= MAX_SELFTEST_ORDER:
        raise ValueError(
            f"selftest max_order must be in 1..{MAX_SELFTEST_ORDER}, got {max_order!r}"
        )
    rng = random.Random(seed)
    report = SelftestReport(max_order=max_order)
    for name, suite in _SUITES:
        cases, failure = suite(max_order, rng)
        report.suites.append(SuiteResult(name=name, cases=cases))
        if failure is not None:
            report.failure = f"{name}: {failure}"
            break
    return report
