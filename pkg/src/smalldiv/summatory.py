"""Exact evaluation of S(x) = sum of a(k) for k <= x, in O(sqrt x) time.

Write each term a(k) as a sum over lattice points (u, y) with y a small
divisor of k and u = k/y its cofactor, so y <= u and u*y <= x. Splitting at
u = isqrt(x) gives two regions:

  * u <= isqrt(x): the column sum is the triangular number T(u), and the
    whole region collapses to the closed form r(r+1)(r+2)/6 with r = isqrt(x);
  * u > isqrt(x): the column sum is T(floor(x/u)), and consecutive u with the
    same quotient are processed as one block.

Both region sweeps touch O(sqrt x) blocks, all arithmetic is exact integer
arithmetic, and a brute-force oracle (per-term accumulation of a(k)) is kept
alongside for cross-checking. Reports compare S(x) against the smooth main
term (2/3) x**1.5.
"""

import math
from dataclasses import dataclass

import numpy as np

from .core import small_divisor_sums_upto
from .errors import DomainError

# The brute oracle costs O(x sqrt x) divisor marks; capped to keep any
# accidental large call from stalling a test run.
BRUTE_CAP = 10**6


def triangular(m: int) -> int:
    """T(m) = m(m+1)/2, exactly."""
    if m < 0:
        raise DomainError("triangular requires m >= 0")
    return m * (m + 1) // 2


def summatory_brute_prefix(limit: int) -> np.ndarray:
    """Read-only array s with s[x] = sum of a(k) for k <= x, for every x <= limit.

    This is the reference oracle: a(k) values come from the brute divisor-pair
    sieve, then a running prefix sum. Nothing is shared with summatory_exact.
    """
    if not 1 <= limit <= BRUTE_CAP:
        raise DomainError(f"brute oracle limited to 1 <= x <= {BRUTE_CAP}")
    prefix = np.cumsum(small_divisor_sums_upto(limit))
    prefix.setflags(write=False)
    return prefix


def summatory_brute(x: int) -> int:
    """Oracle value of S(x) by brute per-term accumulation; x capped at 10**6."""
    return int(summatory_brute_prefix(x)[x])


def summatory_exact(x: int) -> int:
    """Exact S(x) via the two-region lattice decomposition; O(sqrt x) time.

    Exact for any x >= 1 (integers never overflow here); evaluation up to
    x = 10**12 stays well under a few seconds.
    """
    if x < 1:
        raise DomainError("summatory_exact requires x >= 1")
    r = math.isqrt(x)
    # Region with cofactor u <= r: sum of T(u) in closed form.
    total = r * (r + 1) * (r + 2) // 6
    # Region with cofactor u > r: blocks of constant quotient q = x // u.
    u = r + 1
    while u <= x:
        q = x // u
        u_hi = x // q
        total += (u_hi - u + 1) * (q * (q + 1) // 2)
        u = u_hi + 1
    return total


@dataclass(frozen=True)
class SummatoryReport:
    """S(x) against its main term (2/3) x**1.5.

    main_term is binary64 with x**1.5 computed as x * sqrt(x); the normalized
    residual divides by x ln x, the expected scale of the error envelope.
    """

    x: int
    s_exact: int
    main_term: float
    residual: float
    normalized_residual: float


def residual_report(x: int) -> SummatoryReport:
    """Exact S(x) and its deviation from (2/3) x**1.5, normalized by x ln x."""
    if x < 2:
        raise DomainError("residual_report requires x >= 2 (ln x must be positive)")
    s = summatory_exact(x)
    main = (2.0 / 3.0) * x * math.sqrt(x)
    resid = s - main
    return SummatoryReport(x, s, main, resid, resid / (x * math.log(x)))


def sigma_summatory_exact(x: int) -> int:
    """Exact sum of sigma(k) for k <= x, via sum over d <= x of d * floor(x/d).

    Uses the same constant-quotient blocking as summatory_exact, so it is
    O(sqrt x) as well.
    """
    if x < 1:
        raise DomainError("sigma_summatory_exact requires x >= 1")
    total = 0
    u = 1
    while u <= x:
        q = x // u
        u_hi = x // q
        total += q * (u + u_hi) * (u_hi - u + 1) // 2
        u = u_hi + 1
    return total


@dataclass(frozen=True)
class SigmaSummatoryReport:
    """Cross-check companion: sum of sigma(k) against (pi**2/12) x**2."""

    x: int
    s_exact: int
    main_term: float
    residual: float
    ratio: float


def sigma_summatory_report(x: int) -> SigmaSummatoryReport:
    """Exact sigma summatory value compared against its main term (pi**2/12) x**2."""
    if x < 1:
        raise DomainError("sigma_summatory_report requires x >= 1")
    s = sigma_summatory_exact(x)
    main = (math.pi**2 / 12.0) * x * x
    return SigmaSummatoryReport(x, s, main, s - main, s / main)
