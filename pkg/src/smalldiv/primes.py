"""Prime enumeration and primality testing.

Everything here is deterministic: the sieve is a plain Eratosthenes sieve
and the primality test is a Miller-Rabin variant with a fixed witness set
that is exact for every n below 3.3e24 (in particular for all 64-bit inputs).
"""

import math
from functools import lru_cache

import numpy as np

from .errors import DomainError

# Fixed Miller-Rabin witnesses: exact for all n < 3 317 044 064 679 887 385 961 981.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def prime_flags(limit: int) -> np.ndarray:
    """Boolean array f of length limit+1 with f[i] true iff i is prime."""
    if limit < 0:
        raise DomainError("sieve limit must be nonnegative")
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    flags.setflags(write=False)
    return flags


@lru_cache(maxsize=8)
def primes_upto(limit: int) -> tuple[int, ...]:
    """All primes <= limit, ascending."""
    return tuple(int(p) for p in np.nonzero(prime_flags(limit))[0])


def first_primes(m: int) -> list[int]:
    """The first m primes, ascending."""
    if m < 0:
        raise DomainError("prime count must be nonnegative")
    if m == 0:
        return []
    # p_m < m (ln m + ln ln m) for m >= 6; small m handled by the floor of 15.
    bound = 15 if m < 6 else int(m * (math.log(m) + math.log(math.log(m)))) + 1
    ps = primes_upto(bound)
    while len(ps) < m:
        bound *= 2
        ps = primes_upto(bound)
    return list(ps[:m])


def is_prime(n: int) -> bool:
    """Deterministic primality test, exact for all n < 2**64 (and well beyond)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True
