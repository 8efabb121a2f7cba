"""Acceptance suite: one test per shipping criterion, at its stated budget.

Each test prints a single PASS line once its assertions hold (run with
``pytest -s tests/test_acceptance.py`` to see them); failures surface as
ordinary pytest failures.
"""

import random
import time
from fractions import Fraction as F

from fastapi.testclient import TestClient

from cumulants.bench import run_bench
from cumulants.distributions import (
    gaussian_moments,
    marchenko_pastur_moments,
    poisson_moments,
    table_rows,
)
from cumulants.oracles import (
    oracle_boolean_cumulant,
    oracle_classical_cumulant,
    oracle_free_moment,
    series_boolean_cumulants,
    series_classical_cumulants,
    series_free_cumulants_from_moments,
)
from cumulants.scalars import variable
from cumulants.service import app
from cumulants.transforms import (
    CumulantSequence,
    boolean_cumulants_from_moments,
    classical_cumulants_from_moments,
    convert,
    factorial_moments_from_moments,
    free_cumulants_from_moments,
    moments_from_factorial_moments,
    moments_from_free_cumulants,
)

client = TestClient(app)

LAM = variable("lambda")


def _rand_seq(rng, n):
    return [F(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(n)]


def _ok(n, text):
    print(f"ACCEPTANCE {n}: PASS - {text}")


def test_criterion_1_wigner_catalan_table():
    start = time.perf_counter()
    rows = {i: (value, cat) for i, value, cat in table_rows("wigner_catalan", 8)}
    elapsed = time.perf_counter() - start
    expected = {2: (F(1), 2), 3: (F(0), 5), 4: (F(2), 14), 6: (F(5), 132), 8: (F(14), 1430)}
    for i, pair in expected.items():
        assert rows[i] == pair, (i, rows[i])
    # and the served rows carry the same digits, bit-exact
    served = client.post("/table", json={"name": "wigner_catalan", "max_order": 8}).json()
    by_i = {row["i"]: (row["value"], row["catalan"]) for row in served["rows"]}
    for i, (value, cat) in expected.items():
        assert by_i[i] == (str(value), str(cat))
    assert elapsed < 0.1, f"took {elapsed:.3f}s"
    _ok(1, f"wigner/catalan rows 2,3,4,6,8 bit-exact in {elapsed*1000:.1f} ms")


def test_criterion_2_marchenko_pastur_table():
    start = time.perf_counter()
    mp = marchenko_pastur_moments(LAM, 8)
    elapsed = time.perf_counter() - start
    expected = {
        2: "lambda^2+lambda",
        3: "lambda^3+3*lambda^2+lambda",
        4: "lambda^4+6*lambda^3+6*lambda^2+lambda",
        6: "lambda^6+15*lambda^5+50*lambda^4+50*lambda^3+15*lambda^2+lambda",
        8: "lambda^8+28*lambda^7+196*lambda^6+490*lambda^5+490*lambda^4"
           "+196*lambda^3+28*lambda^2+lambda",
    }
    for i, text in expected.items():
        assert str(mp[i - 1]) == text, (i, str(mp[i - 1]))
    assert elapsed < 0.5, f"took {elapsed:.3f}s"
    _ok(2, f"marchenko-pastur rows 2,3,4,6,8 bit-exact in {elapsed*1000:.1f} ms")


def test_criterion_3_wigner_free_cumulants_flatten():
    moments = [F(0), F(1), F(0), F(2), F(0), F(5), F(0), F(14), F(0), F(42)]
    r = free_cumulants_from_moments(moments)
    assert list(r) == [F(0), F(1), F(0), F(0), F(0), F(0), F(0), F(0), F(0), F(0)]
    _ok(3, "free cumulants of the degree-10 semicircle moments are (0,1,0,...,0)")


def test_criterion_4_round_trip_identities():
    rng = random.Random(20260)
    start = time.perf_counter()
    for _ in range(100):
        m = _rand_seq(rng, 12)
        for kind in ("classical", "boolean", "free"):
            back = convert(kind, "moments", convert("moments", kind, m))
            assert list(back) == m, (kind, m)
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0, f"took {elapsed:.3f}s"
    _ok(4, f"300 exact round trips at order 12 in {elapsed:.2f} s")


def test_criterion_5_oracle_equivalence():
    rng = random.Random(20261)
    start = time.perf_counter()
    for _ in range(50):
        order = rng.randint(4, 8)
        m = _rand_seq(rng, order)
        kappa = classical_cumulants_from_moments(m)
        h = boolean_cumulants_from_moments(m)
        for i in range(1, order + 1):
            assert kappa[i - 1] == oracle_classical_cumulant(m, i)
            assert h[i - 1] == oracle_boolean_cumulant(m, i)
        assert list(kappa) == series_classical_cumulants(m)
        assert list(h) == series_boolean_cumulants(m)
        assert list(free_cumulants_from_moments(m)) == series_free_cumulants_from_moments(m)
        r = _rand_seq(rng, order)
        mm = moments_from_free_cumulants(CumulantSequence("free", r))
        for i in range(1, order + 1):
            assert mm[i - 1] == oracle_free_moment(r, i)
        assert list(free_cumulants_from_moments(mm)) == r
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0, f"took {elapsed:.3f}s"
    _ok(5, f"50 sequences against set-partition, composition, NC and series oracles in {elapsed:.2f} s")


def test_criterion_6_gaussian_formula():
    for mu, sigma2 in ((variable("mu"), F(5, 3)), (F(-3, 4), variable("s2"))):
        m = list(gaussian_moments(mu, sigma2, 12))
        full = [F(1)] + m
        for n in range(2, 13):
            assert full[n] == mu * full[n - 1] + (n - 1) * sigma2 * full[n - 2]
    mu = variable("mu")
    kappa = classical_cumulants_from_moments(gaussian_moments(mu, F(7, 2), 10))
    assert list(kappa) == [mu, F(7, 2)] + [F(0)] * 8
    s2 = variable("s2")
    kappa = classical_cumulants_from_moments(gaussian_moments(F(1, 3), s2, 10))
    assert list(kappa) == [F(1, 3), s2] + [F(0)] * 8
    _ok(6, "gaussian moments satisfy the three-term recurrence; cumulants are (mu, sigma2, 0, ...)")


def test_criterion_7_poisson_cumulant_triple():
    m = poisson_moments(LAM, 8)
    assert list(classical_cumulants_from_moments(m)) == [LAM] * 8
    m6 = poisson_moments(LAM, 6)
    h = boolean_cumulants_from_moments(m6)
    r = free_cumulants_from_moments(m6)
    for i in range(1, 7):
        assert h[i - 1] == oracle_boolean_cumulant(m6, i)
    assert list(r) == series_free_cumulants_from_moments(m6)
    _ok(7, "poisson classical cumulants all lambda; boolean/free match oracles symbolically")


def _independent_partition_counts(n):
    table = [[0] * (n + 1) for _ in range(n + 1)]
    for m in range(n + 1):
        table[0][m] = 1
    for k in range(1, n + 1):
        for m in range(1, n + 1):
            table[k][m] = table[k][m - 1] + (table[k - m][m] if k >= m else 0)
    return {k: table[k][n] for k in range(n + 1)}


def test_criterion_8_bench_scaling():
    orders = list(range(15, 28))
    rows = run_bench(orders, repetitions=3, input_kind="rational")
    counts = _independent_partition_counts(27)
    assert counts[15] == 176 and counts[27] == 3010
    for row in rows:
        assert row.terms == counts[row.order], (row.order, row.terms)
        assert row.median_ms < 1000.0, f"order {row.order} took {row.median_ms:.1f} ms"
    slowest = max(r.median_ms for r in rows)
    _ok(8, f"bench orders 15..27: term counts p(15)..p(27) verified, slowest median {slowest:.1f} ms")


def test_criterion_9_stirling_basis_round_trip():
    rng = random.Random(20262)
    for _ in range(100):
        m = _rand_seq(rng, 12)
        assert list(moments_from_factorial_moments(factorial_moments_from_moments(m))) == m
        assert list(factorial_moments_from_moments(moments_from_factorial_moments(m))) == m
    _ok(9, "factorial-moment basis change is an exact involution pair on 100 sequences")
