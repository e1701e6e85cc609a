"""Positional digit lists and bijective base-2 numerals.

All digit lists are least-significant first.
"""

from itertools import count

from .errors import InvalidBaseError, InvalidDigitError
from .validation import check_nat


def _check_base(base):
    base = check_nat(base, "base")
    if base < 2:
        raise InvalidBaseError(f"base must be at least 2, got {base}")
    return base


def to_base(base, n):
    """Digits of ``n`` in ``base``, least significant first.

    Zero yields ``[0]``: at least one digit is always emitted.
    """
    base = _check_base(base)
    n = check_nat(n)
    if base == 2:
        return [int(c) for c in reversed(bin(n)[2:])]
    digits = []
    while True:
        n, d = divmod(n, base)
        digits.append(d)
        if n == 0:
            return digits


def from_base(base, digits):
    base = _check_base(base)
    digits = list(digits)
    for i, d in enumerate(digits):
        if isinstance(d, bool) or not isinstance(d, int) or not 0 <= d < base:
            raise InvalidDigitError(
                f"digit {d!r} at position {i} is not valid in base {base}")
    if not digits:
        return 0
    if base == 2:
        return int("".join("01"[d] for d in reversed(digits)), 2)
    n = 0
    for d in reversed(digits):
        n = n * base + d
    return n


def to_bits(n):
    return to_base(2, n)


def from_bits(bits):
    return from_base(2, bits)


def nat_to_bijbits(n):
    """Bijective base-2 numeral of ``n``: the bits of ``n + 1`` minus the top 1."""
    return to_bits(check_nat(n) + 1)[:-1]


def bijbits_to_nat(bits):
    return from_bits(list(bits) + [1]) - 1


def all_bitstrings():
    """Yield every finite bitstring exactly once, in bijective-numeral order."""
    for n in count():
        yield nat_to_bijbits(n)
