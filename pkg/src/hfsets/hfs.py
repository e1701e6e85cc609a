"""Hereditarily finite sets with urelements and their Ackermann encoding.

An HFS is either an :class:`Urelement` carrying a natural below the
urelement limit ``u``, or an :class:`HSet` of HFS children.  With limit
``u`` the encoding is::

    code(Urelement(n)) = n
    code(HSet(xs))     = u + sum(2 ** code(x) for x in xs)

which is a bijection onto the naturals.  ``u = 0`` gives the pure universe
whose empty set is ``HSet()``.  Canonical trees list children in increasing
code order, without repeats.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import count
from typing import Callable, Sequence, Tuple, Union

from .errors import CanonicalFormError, InvalidUrelementError, TooLargeError
from .natset import nat_to_set, set_to_nat
from .validation import check_nat

MAX_LIST_SUBSETS = 30


@dataclass(frozen=True)
class Urelement:
    value: int

    def __repr__(self):
        return f"U {self.value}"


@dataclass(frozen=True)
class HSet:
    children: Tuple["HFS", ...] = ()

    def __init__(self, children=()):
        object.__setattr__(self, "children", tuple(children))

    def __repr__(self):
        return "S [" + ",".join(map(repr, self.children)) + "]"


HFS = Union[Urelement, HSet]


def hfs_to_nat(u, h):
    """Ackermann code of a canonical tree ``h`` under urelement limit ``u``."""
    return _encode(check_nat(u, "u"), h, {})


def _encode(u, h, memo):
    # memo is keyed by node identity: decoded trees share their subtrees
    key = id(h)
    if key in memo:
        return memo[key]
    if isinstance(h, Urelement):
        n = check_nat(h.value, "urelement")
        if n >= u:
            raise InvalidUrelementError(
                f"urelement {n} is not below the urelement limit {u}")
        return n
    if not isinstance(h, HSet):
        raise TypeError(f"expected an HFS, got {type(h).__name__}")
    code = 0
    prev = -1
    for x in h.children:
        c = _encode(u, x, memo)
        if c <= prev:
            raise CanonicalFormError(
                f"non-canonical set: child codes must be strictly increasing, "
                f"found {prev} before {c}")
        prev = c
        code += 1 << c
    memo[key] = u + code
    return u + code


def nat_to_hfs(u, n):
    return _decode(check_nat(u, "u"), check_nat(n))


@lru_cache(maxsize=1 << 16)
def _decode(u, n):
    if n < u:
        return Urelement(n)
    return HSet(tuple(_decode(u, e) for e in nat_to_set(n - u)))


def hfs_show(u, n):
    """Brace rendering of ``n`` as an HFS; urelements print as numerals.

    At ``u == 1`` the lone urelement 0 stands in for the empty set and prints
    as ``{}``.
    """
    u = check_nat(u, "u")
    n = check_nat(n)
    if u == 1 and n == 0:
        return "{}"
    if n < u:
        return str(n)
    return "{" + ",".join(hfs_show(u, e) for e in nat_to_set(n - u)) + "}"


def hfold(set_combine, urelem_map, h):
    if isinstance(h, Urelement):
        return urelem_map(h.value)
    return set_combine([hfold(set_combine, urelem_map, x) for x in h.children])


def nfold(u, set_combine, urelem_map, n):
    """Same as ``hfold(set_combine, urelem_map, nat_to_hfs(u, n))``, without the tree."""
    u = check_nat(u, "u")
    n = check_nat(n)
    if n < u:
        return urelem_map(n)
    return set_combine([nfold(u, set_combine, urelem_map, e) for e in nat_to_set(n - u)])


def _count_sets(xs):
    return 1 + sum(xs)


def hsize(h):
    """Number of nodes in the tree, urelements included."""
    return hfold(_count_sets, lambda _: 1, h)


def nsize(n, u=0):
    return nfold(u, _count_sets, lambda _: 1, n)


# Functor from HFS to Nat: lift functions on codes to functions on trees.

def to_nat_liftn(f: Callable[[Sequence[int]], int], u=0):
    return lambda hs: nat_to_hfs(u, f([hfs_to_nat(u, h) for h in hs]))


def to_nat_lift1(f: Callable[[int], int], u=0):
    return lambda h: nat_to_hfs(u, f(hfs_to_nat(u, h)))


def to_nat_lift2(f: Callable[[int, int], int], u=0):
    return lambda h, k: nat_to_hfs(u, f(hfs_to_nat(u, h), hfs_to_nat(u, k)))


# Functor from Nat to HFS: lift functions on trees to functions on codes.

def to_hfs_liftn(f: Callable[[Sequence[HFS]], HFS], u=0):
    return lambda ns: hfs_to_nat(u, f([nat_to_hfs(u, n) for n in ns]))


def to_hfs_lift1(f: Callable[[HFS], HFS], u=0):
    return lambda n: hfs_to_nat(u, f(nat_to_hfs(u, n)))


def to_hfs_lift2(f: Callable[[HFS, HFS], HFS], u=0):
    return lambda x, y: hfs_to_nat(u, f(nat_to_hfs(u, x), nat_to_hfs(u, y)))


def hsucc(h, u=0):
    return to_nat_lift1(lambda n: n + 1, u)(h)


def hsum(hs, u=0):
    return to_nat_liftn(sum, u)(hs)


def hproduct(hs, u=0):
    def product(ns):
        p = 1
        for n in ns:
            p *= n
        return p
    return to_nat_liftn(product, u)(hs)


def hequal(h, k, u=0):
    return to_nat_lift2(lambda i, j: 1 if i == j else 0, u)(h, k)


def hexp2(h, u=0):
    return to_nat_lift1(lambda n: 1 << n, u)(h)


def iter_subsets(xs):
    """Lazily yield the subsequences of ``xs`` in :func:`list_subsets` order.

    Subset number ``i`` holds ``xs[j]`` exactly when bit ``j`` of ``i`` is set,
    so the first element toggles fastest.
    """
    xs = list(xs)
    for i in range(1 << len(xs)):
        yield [xs[j] for j in nat_to_set(i)]


def list_subsets(xs):
    xs = list(xs)
    if len(xs) > MAX_LIST_SUBSETS:
        raise TooLargeError(
            f"{len(xs)} elements have 2^{len(xs)} subsets; limit is {MAX_LIST_SUBSETS}")
    return list(iter_subsets(xs))


def iterative_hfs_stream(u=0):
    """Yield ``nat_to_hfs(u, 0), nat_to_hfs(u, 1), ...`` forever."""
    u = check_nat(u, "u")
    for n in count():
        yield nat_to_hfs(u, n)


def direct_hfs_stream():
    """Enumerate pure HFS by iterating the powerset operation from scratch.

    Level ``k`` lists the members of the ``k``-fold iterated powerset of the
    empty set.  Levels are walked in turn and each set is emitted the first
    time it shows up.  Every level is a prefix of the next and is only
    materialized while its successor is being generated lazily.
    """
    seen = set()
    level = []  # (code, tree) pairs of the previous level
    for k in count():
        # levels 0 and 1 have no members
        if k < 2:
            continue
        current = []
        for subset in iter_subsets(level):
            code = set_to_nat([c for c, _ in subset])
            tree = HSet(t for _, t in subset)
            current.append((code, tree))
            if code not in seen:
                seen.add(code)
                yield tree
        level = current
