"""Exact integer arithmetic for small-divisor sums and their companions.

A *small divisor* of n is a divisor d with d*d <= n. All predicates here use
that integer comparison; no floating-point square roots are involved anywhere,
so perfect squares are never misclassified.

Functions: a(n) = small_divisor_sum, its multiplicative companion b(n),
sigma(n) (divisor sum), tau(n) (divisor count), plus factorization and
divisor enumeration. Everything is pure and deterministic; values are plain
Python ints, so there is no silent wraparound at any size.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DivisorBudgetError, DomainError
from .primes import is_prime, primes_upto

# Inputs to factorize() must stay below 2**63; directly built factorizations
# may exceed it (the arithmetic is arbitrary precision either way).
FACTORIZE_LIMIT = 2**63

# Default budget for explicit divisor enumeration.
DIVISOR_CAP = 2**20

_TRIAL_PRIME_LIMIT = 10**6


def isqrt(n: int) -> int:
    """Integer square root: the r with r*r <= n < (r+1)*(r+1)."""
    if n < 0:
        raise DomainError("isqrt requires n >= 0")
    return math.isqrt(n)


@dataclass(frozen=True)
class Factorization:
    """A number together with its prime factorization.

    factors is an ascending tuple of (prime, exponent) pairs whose product
    reconstructs value; it is empty exactly for value 1. Construction
    validates all of that, including primality of every listed prime.
    """

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.value < 1:
            raise DomainError("factored value must be >= 1")
        prod = 1
        prev = 1
        for p, e in self.factors:
            if p <= prev:
                raise DomainError("primes must be strictly increasing")
            if e < 1:
                raise DomainError("exponents must be >= 1")
            if not is_prime(p):
                raise DomainError(f"{p} is not prime")
            prod *= p**e
            prev = p
        if prod != self.value:
            raise DomainError("factor product does not equal value")

    def tau(self) -> int:
        t = 1
        for _, e in self.factors:
            t *= e + 1
        return t


def _brent_rho(n: int) -> int:
    """A nontrivial factor of composite n, by Brent's cycle variant.

    Parameters are swept deterministically (fixed y0, increasing c), so the
    returned factor is a pure function of n.
    """
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        y, m, g, r, q = 2, 128, 1, 1, 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            # Backtrack one step at a time to recover the factor.
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed to split {n}")  # unreachable in practice


def _split(n: int, out: dict):
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _brent_rho(n)
    _split(d, out)
    _split(n // d, out)


def factorize(n: int) -> Factorization:
    """Unique prime factorization of n, for 1 <= n < 2**63.

    Trial division by primes below 10**6, then Brent-variant Pollard rho with
    a deterministic Miller-Rabin check for the cofactor.
    """
    if n < 1:
        raise DomainError("factorize requires n >= 1")
    if n >= FACTORIZE_LIMIT:
        raise DomainError("factorize requires n < 2**63")
    val = n
    found: dict[int, int] = {}
    trial_limit = 1000 if n <= 10**6 else _TRIAL_PRIME_LIMIT
    for p in primes_upto(trial_limit):
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            found[p] = e
    _split(n, found)
    return Factorization(val, tuple(sorted(found.items())))


def divisors(f: Factorization, cap: int = DIVISOR_CAP) -> list[int]:
    """All tau(n) divisors of f.value, ascending.

    Rejects the enumeration up front when tau(n) exceeds cap, so runaway
    expansions fail fast instead of exhausting memory.
    """
    if f.tau() > cap:
        raise DivisorBudgetError(f"divisor count {f.tau()} exceeds cap {cap}")
    divs = [1]
    for p, e in f.factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    divs.sort()
    return divs


def small_divisor_sum(n: int) -> int:
    """a(n): the sum of divisors d of n with d*d <= n.

    Equals 1 exactly when n is 1 or prime. Plain trial division up to
    isqrt(n); this is the reference route, kept deliberately simple.
    """
    if n < 1:
        raise DomainError("small_divisor_sum requires n >= 1")
    total = 0
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            total += d
    return total


def small_divisor_sum_factored(f: Factorization, cap: int = DIVISOR_CAP) -> int:
    """a(n) computed from a factorization, for n whose trial division is too slow.

    Enumerates all divisors (subject to cap) and sums those with d*d <= n;
    agrees with small_divisor_sum(f.value) everywhere.
    """
    if f.tau() > cap:
        raise DivisorBudgetError(f"divisor count {f.tau()} exceeds cap {cap}")
    n = f.value
    divs = [1]
    for p, e in f.factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sum(d for d in divs if d * d <= n)


def sigma(f: Factorization) -> int:
    """sigma(n): sum of all positive divisors, as the product of (p**(e+1)-1)/(p-1)."""
    total = 1
    for p, e in f.factors:
        total *= (p ** (e + 1) - 1) // (p - 1)
    return total


def tau(f: Factorization) -> int:
    """tau(n): number of positive divisors, as the product of (e+1)."""
    return f.tau()


def b_multiplicative(f: Factorization) -> int:
    """b(n): the multiplicative companion of a(n).

    b is multiplicative with b(p**e) = 1 + p + ... + p**(e//2), so b(n) is the
    product of those prime-power values; b(1) = 1.
    """
    total = 1
    for p, e in f.factors:
        total *= (p ** (e // 2 + 1) - 1) // (p - 1)
    return total


def b_via_square_divisors(n: int) -> int:
    """b(n) as the sum of square roots of the square divisors of n.

    Sums d over all d with d*d dividing n; equals b_multiplicative(factorize(n)).
    Squarefree n gives 1 (only d=1 qualifies).
    """
    if n < 1:
        raise DomainError("b_via_square_divisors requires n >= 1")
    total = 0
    for d in range(1, math.isqrt(n) + 1):
        if n % (d * d) == 0:
            total += d
    return total


@lru_cache(maxsize=4)
def small_divisor_sums_upto(limit: int) -> np.ndarray:
    """Read-only int64 array t with t[k] = a(k) for 1 <= k <= limit (t[0] = 0).

    Built by marking every small divisor d against each of its multiples
    m >= d*d, i.e. by brute enumeration of all (d, m) divisor pairs.
    """
    if limit < 1:
        raise DomainError("table limit must be >= 1")
    table = np.zeros(limit + 1, dtype=np.int64)
    for d in range(1, math.isqrt(limit) + 1):
        table[d * d :: d] += d
    table.setflags(write=False)
    return table


@lru_cache(maxsize=4)
def b_values_upto(limit: int) -> np.ndarray:
    """Read-only int64 array t with t[k] = b(k) for 1 <= k <= limit (t[0] = 0).

    Built on the square-divisor characterization: every d contributes to each
    multiple of d*d.
    """
    if limit < 1:
        raise DomainError("table limit must be >= 1")
    table = np.zeros(limit + 1, dtype=np.int64)
    for d in range(1, math.isqrt(limit) + 1):
        table[d * d :: d * d] += d
    table.setflags(write=False)
    return table
