"""Pairing functions from pairs of naturals to naturals."""

from math import isqrt
from typing import NamedTuple

from .errors import TooLargeError
from .natset import nat_adduction, nat_singleton, nat_to_set, set_to_nat
from .validation import check_nat

# Kuratowski codes have 2**(2**x + 2**y) magnitude; refuse exponents past this.
MAX_KURATOWSKI_EXPONENT = 1 << 20


class NatPair(NamedTuple):
    x: int
    y: int


def kuratowski_pair(x, y):
    """Code of ``{{x}, {x, y}}``. Injective, not surjective."""
    x = check_nat(x, "x")
    y = check_nat(y, "y")
    # the largest exponent set in the result is code({x, y}) = 2**x | 2**y
    if max(x, y) > MAX_KURATOWSKI_EXPONENT.bit_length() or \
            (1 << x | 1 << y) > MAX_KURATOWSKI_EXPONENT:
        raise TooLargeError(
            f"Kuratowski pair of ({x}, {y}) has an exponent above {MAX_KURATOWSKI_EXPONENT}")
    sx = nat_singleton(x)
    sxy = nat_adduction(x, nat_singleton(y))
    return nat_adduction(sx, nat_singleton(sxy))


def cantor_pair(x, y):
    x = check_nat(x, "x")
    y = check_nat(y, "y")
    s = x + y
    return s * (s + 1) // 2 + y


def cantor_unpair(z):
    """Exact inverse of :func:`cantor_pair`, using integer square roots only."""
    z = check_nat(z, "z")
    w = (isqrt(8 * z + 1) - 1) // 2
    y = z - w * (w + 1) // 2
    return NatPair(w - y, y)


def bitmerge_pair(x, y):
    """Interleave bits: ``x`` on even positions, ``y`` on odd positions."""
    evens = [2 * e for e in nat_to_set(check_nat(x, "x"))]
    odds = [2 * e + 1 for e in nat_to_set(check_nat(y, "y"))]
    return set_to_nat(sorted(evens + odds))


def bitmerge_unpair(n):
    xs, ys = [], []
    for e in nat_to_set(n):
        (ys if e & 1 else xs).append(e >> 1)
    return NatPair(set_to_nat(xs), set_to_nat(ys))
