"""Constructive witnesses for the extreme behavior of a(n)/sqrt(n).

Primes give the bottom: a(p) = 1, so a(p)/sqrt(p) can be made arbitrarily
small. The squared-primorial sequence s_m = (p_1 p_2 ... p_m)**2 gives the
top: every squarefree product of the first m primes is a small divisor of
s_m, forcing a(s_m)/sqrt(s_m) >= prod(1 + 1/p_k), which grows without bound.

Also here: the supermultiplicativity check a(mn) >= a(m) a(n) for coprime
pairs, its seeded random-pair driver, and the fixed counterexample showing
the inequality can fail when gcd(m, n) > 1.
"""

import math
from dataclasses import dataclass

from .core import (
    Factorization,
    factorize,
    small_divisor_sum,
    small_divisor_sum_factored,
)
from .errors import DomainError, NotCoprimeError
from .primes import first_primes, primes_upto

WITNESS_DEFAULT_MAX = 7
WITNESS_EXTENDED_MAX = 10

_MASK64 = (1 << 64) - 1


def primes_first(m: int) -> list[int]:
    """The first m primes, for 1 <= m <= 15."""
    if not 1 <= m <= 15:
        raise DomainError("primes_first requires 1 <= m <= 15")
    return first_primes(m)


@dataclass(frozen=True)
class WitnessReport:
    """One term of the squared-primorial witness sequence.

    s_m is a perfect square, so sqrt(s_m) = isqrt(s_m) exactly and the ratio
    a(s_m)/sqrt(s_m) is an exact integer quotient rendered in binary64.
    """

    m: int
    s_m: int
    a_value: int
    ratio: float
    lower_bound: float


def witness_report(m: int, allow_large: bool = False) -> WitnessReport:
    """Evaluate the witness s_m = prod of the first m squared primes.

    m is capped at 7 by default (3**7 divisors to enumerate); allow_large
    raises the cap to 10, which needs a bigger divisor budget.
    """
    cap = WITNESS_EXTENDED_MAX if allow_large else WITNESS_DEFAULT_MAX
    if not 1 <= m <= cap:
        raise DomainError(f"witness_report requires 1 <= m <= {cap}")
    ps = first_primes(m)
    s_m = 1
    for p in ps:
        s_m *= p * p
    f = Factorization(s_m, tuple((p, 2) for p in ps))
    a_value = small_divisor_sum_factored(f, cap=3**WITNESS_EXTENDED_MAX)
    ratio = a_value / math.isqrt(s_m)
    lower = 1.0
    for p in ps:
        lower *= 1.0 + 1.0 / p
    if ratio < lower:
        raise AssertionError(f"witness ratio {ratio} fell below its bound {lower}")
    return WitnessReport(m, s_m, a_value, ratio, lower)


def liminf_witness(bound: int) -> list[tuple[int, int]]:
    """All primes p <= bound paired with a(p); every a(p) equals 1."""
    if bound < 2:
        raise DomainError("liminf_witness requires bound >= 2")
    return [(p, small_divisor_sum(p)) for p in primes_upto(bound)]


@dataclass(frozen=True)
class SupermultCheck:
    """Result of one supermultiplicativity comparison a(mn) >= a(m) a(n)."""

    m: int
    n: int
    lhs: int
    rhs: int
    holds: bool


def supermult_check(m: int, n: int) -> SupermultCheck:
    """Compare a(mn) against a(m) a(n) for coprime m, n.

    Non-coprime pairs are rejected outright: the inequality's hypothesis is
    gcd(m, n) = 1 and its conclusion can genuinely fail without it, so silent
    acceptance would poison property suites.
    """
    if m < 1 or n < 1:
        raise DomainError("supermult_check requires m, n >= 1")
    if math.gcd(m, n) != 1:
        raise NotCoprimeError(f"gcd({m}, {n}) = {math.gcd(m, n)} != 1")
    a_m = small_divisor_sum_factored(factorize(m))
    a_n = small_divisor_sum_factored(factorize(n))
    a_mn = small_divisor_sum_factored(factorize(m * n))
    return SupermultCheck(m, n, a_mn, a_m * a_n, a_mn >= a_m * a_n)


@dataclass(frozen=True)
class Counterexample:
    """The fixed non-coprime pair where a(mn) < a(m) a(n)."""

    m: int
    n: int
    product: int
    a_product: int
    a_m_times_a_n: int
    gcd: int


def non_complete_counterexample() -> Counterexample:
    """The pair (24, 36): a(864) = 130 < 160 = a(24) a(36), with gcd 12."""
    m, n = 24, 36
    return Counterexample(
        m=m,
        n=n,
        product=m * n,
        a_product=small_divisor_sum(m * n),
        a_m_times_a_n=small_divisor_sum(m) * small_divisor_sum(n),
        gcd=math.gcd(m, n),
    )


def _splitmix64(state: int) -> tuple[int, int]:
    """One step of the splitmix64 stream: (new state, 64-bit output)."""
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


def random_coprime_pairs(count: int, max_value: int, seed: int) -> list[tuple[int, int]]:
    """Deterministic coprime pairs (m, n) with 2 <= m, n <= max_value.

    Draws come from a splitmix64 stream keyed by seed; pairs with a common
    factor are rejected and redrawn, so output depends only on (count,
    max_value, seed).
    """
    if count < 1:
        raise DomainError("random_coprime_pairs requires count >= 1")
    if max_value < 2:
        raise DomainError("random_coprime_pairs requires max_value >= 2")
    if max_value == 2:
        raise DomainError("no coprime pair exists with 2 <= m, n <= 2")
    state = seed & _MASK64
    span = max_value - 1
    pairs = []
    while len(pairs) < count:
        state, r1 = _splitmix64(state)
        state, r2 = _splitmix64(state)
        m = 2 + r1 % span
        n = 2 + r2 % span
        if math.gcd(m, n) == 1:
            pairs.append((m, n))
    return pairs
