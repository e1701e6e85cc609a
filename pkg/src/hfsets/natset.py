"""The bijection between naturals and finite sets of naturals.

A finite set of naturals is represented as a strictly increasing list; its
code is the sum of the corresponding powers of two.  Set operations,
hypergraphs, powersets, ordinals and choice functions are all expressed
directly on codes.
"""

from functools import reduce
from itertools import count

from .errors import (CanonicalFormError, EmptyFoldError, EmptySetInFamilyError,
                     RepresentationOverflowError, TooLargeError)
from .validation import MAX_RESULT_BITS, check_nat

MAX_POWSET_POPCOUNT = 30
MAX_ORDINAL = 5


def check_natset(s, name="set"):
    """Validate a strictly increasing sequence of naturals and return it as a list."""
    s = [check_nat(e, f"{name} element") for e in s]
    for a, b in zip(s, s[1:]):
        if a >= b:
            raise CanonicalFormError(
                f"{name} must be strictly increasing, found {a} before {b}")
    return s


def set_to_nat(s):
    return sum(1 << e for e in check_natset(s))


def nat_to_set(n):
    """Positions of the 1-bits of ``n``, in increasing order."""
    bits = bin(check_nat(n))[:1:-1]
    return [i for i, c in enumerate(bits) if c == "1"]


def to_exps(f):
    """Lift a function on lists of sets to a function on lists of codes."""
    return lambda codes: set_to_nat(f([nat_to_set(c) for c in codes]))


def from_exps(f):
    """Lift a function on lists of codes to a function on lists of sets."""
    return lambda sets: nat_to_set(f([set_to_nat(s) for s in sets]))


def _set_op(op):
    def folded(sets):
        if not sets:
            raise EmptyFoldError("set operation needs at least one operand")
        return sorted(reduce(op, map(set, sets)))
    return folded


nats_union = to_exps(_set_op(set.union))
nats_union.__doc__ = "Code of the union of the sets coded by ``codes``."
nats_intersect = to_exps(_set_op(set.intersection))
nats_intersect.__doc__ = "Code of the intersection of the sets coded by ``codes``."


def nat_union(a, b):
    return check_nat(a, "a") | check_nat(b, "b")


def nat_intersect(a, b):
    return check_nat(a, "a") & check_nat(b, "b")


def nat_singleton(i):
    return 1 << check_nat(i, "i")


def nat_adduction(i, s):
    """Code of ``{i} | decode(s)``."""
    return nat_union(nat_singleton(i), s)


def nat_equal(i, j):
    return 1 if check_nat(i, "i") == check_nat(j, "j") else 0


def _check_powset_size(i):
    k = i.bit_count()
    if k > MAX_POWSET_POPCOUNT:
        raise TooLargeError(
            f"powerset of a {k}-element set has 2^{k} members; "
            f"limit is {MAX_POWSET_POPCOUNT} elements")
    # the full subset is itself a member, so the result has i + 1 bits
    if i >= MAX_RESULT_BITS:
        raise TooLargeError(f"powerset code of {i} would need {i + 1} bits")


def nat_powset(i):
    """Code of the set of all subsets of ``nat_to_set(i)``."""
    from .hfs import list_subsets

    i = check_nat(i, "i")
    _check_powset_size(i)
    return set_to_nat(sorted(set_to_nat(s) for s in list_subsets(nat_to_set(i))))


def nat_powset_alt(i):
    """Powerset code computed as a product of ``1 + 2**(2**k)`` factors."""
    i = check_nat(i, "i")
    _check_powset_size(i)
    p = 1
    for k in nat_to_set(i):
        p *= 1 + (1 << (1 << k))
    return p


def nat_ordinal(n):
    """Code of the von Neumann ordinal ``n = {0, 1, ..., n-1}``.

    Only ``n <= 5`` is representable; the code of 6 has ``2**(2**2059)`` bits.
    """
    n = check_nat(n)
    if n > MAX_ORDINAL:
        raise RepresentationOverflowError(
            f"ordinal {n} cannot be represented; maximum is {MAX_ORDINAL}")
    smaller = []
    for _ in range(n):
        smaller.append(set_to_nat(smaller))
    return set_to_nat(smaller)


def nat_choice_fun(i):
    """Code of a choice function over the family of sets coded by ``i``.

    Each member ``e`` is paired (bit-merge) with its least element.
    """
    from .pairing import bitmerge_pair

    i = check_nat(i, "i")
    if i & 1:
        raise EmptySetInFamilyError(
            f"{i} is odd: its family contains the empty set, which has no element to choose")
    return set_to_nat(sorted(bitmerge_pair(e, nat_to_set(e)[0]) for e in nat_to_set(i)))


def nat_to_hypergraph(n):
    return [nat_to_set(e) for e in nat_to_set(n)]


def hypergraph_to_nat(h):
    codes = [set_to_nat(e) for e in h]
    check_natset(codes, "hyperedge codes")
    return set_to_nat(codes)


def hypergraph_stream():
    for n in count():
        yield nat_to_hypergraph(n)
