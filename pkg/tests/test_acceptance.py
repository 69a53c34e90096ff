"""Acceptance suite: one test per numbered criterion, at the stated tolerance.

Each test prints a single pass/fail line (visible with `pytest -s` or in the
captured output section) and enforces its runtime budget. Run the whole gate
with:

    pytest tests/test_acceptance.py -v -s
"""

import math
import random
import time
from contextlib import contextmanager

import reference
from smalldiv.core import (
    b_multiplicative,
    b_values_upto,
    b_via_square_divisors,
    factorize,
    small_divisor_sum,
    small_divisor_sums_upto,
)
from smalldiv.dirichlet import (
    Series,
    convergence_upper_bound,
    divergence_lower_bound,
    euler_product_b,
    partial_dirichlet,
    partial_power_sum_bound,
    sandwich_check,
    tail_bound_inverse_squares,
    zeta_bracket,
)
from smalldiv.summatory import (
    summatory_brute,
    summatory_brute_prefix,
    summatory_exact,
)
from smalldiv.witness import (
    non_complete_counterexample,
    random_coprime_pairs,
    supermult_check,
    witness_report,
)


@contextmanager
def criterion(number: int, name: str, budget_seconds: float):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"criterion {number:02d} {name}: FAIL")
        raise
    elapsed = time.perf_counter() - start
    if elapsed >= budget_seconds:
        print(f"criterion {number:02d} {name}: FAIL (runtime {elapsed:.2f} s, budget {budget_seconds} s)")
        raise AssertionError(f"criterion {number} exceeded runtime budget")
    print(f"criterion {number:02d} {name}: PASS ({elapsed:.2f} s)")


def test_criterion_01_fixed_value_regression():
    with criterion(1, "fixed-value regression", 1.0):
        assert small_divisor_sum(24) == 10
        assert small_divisor_sum(36) == 16
        assert small_divisor_sum(864) == 130
        assert small_divisor_sum(72) == 24
        assert b_via_square_divisors(72) == 12
        assert b_multiplicative(factorize(72)) == 12
        flags = reference.prime_flags(10**4)
        primes = [n for n in range(2, 10**4 + 1) if flags[n]]
        assert len(primes) == 1229
        assert all(small_divisor_sum(p) == 1 for p in primes)


def test_criterion_02_oracle_equivalence():
    with criterion(2, "summatory oracle equivalence", 60.0):
        prefix = summatory_brute_prefix(10**6)
        for x in range(1, 10**4 + 1):
            assert summatory_exact(x) == int(prefix[x]), x
        # the prefix array is exactly what summatory_brute returns pointwise
        rng = random.Random(20260810)
        sample = [rng.randrange(1, 10**6 + 1) for _ in range(50)]
        for x in sample:
            assert summatory_exact(x) == int(prefix[x]), x
        for x in sample[:5]:
            assert summatory_brute(x) == int(prefix[x])


def test_criterion_03_average_order_envelope():
    with criterion(3, "average-order residual envelope", 5.0):
        ratio_errors = []
        for exponent in (3, 4, 5, 6, 7):
            x = 10**exponent
            s = summatory_exact(x)
            main = (2.0 / 3.0) * x * math.sqrt(x)
            normalized = (s - main) / (x * math.log(x))
            assert abs(normalized) <= 1.0, (x, normalized)
            ratio_errors.append(abs(s / main - 1.0))
        assert all(b < a for a, b in zip(ratio_errors, ratio_errors[1:])), ratio_errors


def test_criterion_04_performance_at_1e12():
    with criterion(4, "summatory_exact(10**12) performance", 11.0):
        t0 = time.perf_counter()
        first = summatory_exact(10**12)
        t1 = time.perf_counter()
        second = summatory_exact(10**12)
        t2 = time.perf_counter()
        assert t1 - t0 < 5.0
        assert t2 - t1 < 5.0
        assert first == second


def test_criterion_05_divergence_direction():
    with criterion(5, "divergence at sigma = 3/2", 60.0):
        values = {}
        for exponent in (2, 3, 4, 5, 6):
            n = 10**exponent
            value = partial_dirichlet(Series.A, 1.5, n).value
            assert value >= divergence_lower_bound(n), n
            values[exponent] = value
        for lo, hi in ((4, 5), (5, 6)):
            growth = values[hi] - values[lo]
            assert 2.0 <= growth <= 1.15 * math.log(10), growth


def test_criterion_06_convergence_direction():
    with criterion(6, "convergence for 3/2 < sigma < 2", 60.0):
        for sigma in (1.6, 1.75, 1.9):
            value = partial_dirichlet(Series.A, sigma, 10**6).value
            assert value <= convergence_upper_bound(sigma), sigma


def test_criterion_07_euler_product_identity():
    with criterion(7, "Euler product of the b-series", 10.0):
        zeta_product = zeta_bracket(5.0) * zeta_bracket(3.0)
        assert abs(euler_product_b(3.0, 10**5) - zeta_product.mid) < 1e-6
        b_partial = partial_dirichlet(Series.B, 3.0, 10**5).value
        assert abs(b_partial - zeta_product.mid) < 1e-4


def test_criterion_08_sandwich_inequality():
    with criterion(8, "zeta sandwich for sigma > 2", 30.0):
        for sigma in (2.25, 2.5, 3.0, 4.0):
            report = sandwich_check(sigma, 10**5)
            assert report.lower_ok and report.upper_ok, sigma


def test_criterion_09_supermultiplicativity():
    with criterion(9, "supermultiplicativity property suite", 30.0):
        pairs = random_coprime_pairs(10**4, 10**4, 42)
        assert len(pairs) == 10**4
        for m, n in pairs:
            check = supermult_check(m, n)
            assert check.holds, (m, n)
        ce = non_complete_counterexample()
        assert ce.a_product == 130 and ce.a_m_times_a_n == 160
        assert ce.a_product < ce.a_m_times_a_n


def test_criterion_10_witness_suite():
    with criterion(10, "squared-primorial witness growth", 10.0):
        reports = [witness_report(m) for m in range(1, 8)]
        assert reports[0].ratio == reports[0].lower_bound  # equality at m = 1
        for rep in reports:
            assert rep.ratio >= rep.lower_bound, rep.m
        ratios = [rep.ratio for rep in reports]
        assert all(b > a for a, b in zip(ratios, ratios[1:])), ratios


def test_criterion_11_b_identities():
    with criterion(11, "b-function identities up to 10**5", 60.0):
        limit = 10**5
        b_table = b_values_upto(limit)  # square-divisor route, sieved
        for n in range(1, limit + 1):
            assert b_multiplicative(factorize(n)) == int(b_table[n]), n
        for n in range(1, 10**4 + 1):
            assert b_via_square_divisors(n) == int(b_table[n]), n
        a_table = small_divisor_sums_upto(limit)
        for n in range(1, limit + 1):
            assert int(b_table[n]) <= int(a_table[n]), n


def test_criterion_12_auxiliary_inequalities():
    with criterion(12, "auxiliary power-sum inequalities", 5.0):
        for m, sigma in ((1, 1.75), (100, 1.75), (10**4, 1.9)):
            direct = sum(y ** (1.0 - sigma) for y in range(1, m + 1))
            assert direct <= partial_power_sum_bound(m, sigma), (m, sigma)
        for n in (1, 100, 10**6):
            direct = sum(1.0 / (x * x) for x in range(math.isqrt(n) + 1, n + 1))
            assert direct <= tail_bound_inverse_squares(n), n
