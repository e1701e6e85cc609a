"""Input checks shared by the codec modules."""

import numbers

from .errors import InvalidNaturalError

# Largest bit length any guarded operation is willing to materialize (8 MiB).
MAX_RESULT_BITS = 1 << 26


def check_nat(n, name="n"):
    """Return ``n`` as an ``int`` if it is a natural number, else raise."""
    if isinstance(n, bool) or not isinstance(n, numbers.Integral):
        raise InvalidNaturalError(f"{name} must be a natural number, got {n!r}")
    n = int(n)
    if n < 0:
        raise InvalidNaturalError(f"{name} must be non-negative, got {n}")
    return n
