"""Exception types shared across the package."""


class SmallDivError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(SmallDivError, ValueError):
    """An argument lies outside the documented domain of an operation."""


class NotCoprimeError(DomainError):
    """A pair (m, n) with gcd(m, n) != 1 was passed where coprimality is required."""


class DivisorBudgetError(SmallDivError, OverflowError):
    """A divisor enumeration would exceed the configured divisor-count budget."""
