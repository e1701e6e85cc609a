"""Membership graphs of hereditarily finite sets, decoration, and digraph codes.

A :class:`Dag` is an adjacency structure over the vertices ``0..hi``.  Built
from a natural ``n``, its vertices stand for the naturals occurring in the
hereditary decomposition of ``n`` and its edges for the membership relation.
:func:`decorate` recovers the code of a vertex from the graph shape alone.
"""

import enum
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import (CanonicalFormError, CyclicGraphError, InvalidGraphError,
                     InvalidLabelsError, TooLargeError)
from .natset import nat_to_set, set_to_nat
from .pairing import bitmerge_pair, bitmerge_unpair
from .validation import MAX_RESULT_BITS, check_nat

Edge = Tuple[int, int]

# Raw DAGs index vertices by value, so they are capped well below memory limits.
MAX_RAW_DAG_VERTICES = 1 << 20


class Orientation(enum.Enum):
    MEMBER = "member"  # element -> container
    CONTAINS = "contains"  # container -> element


@dataclass(frozen=True)
class Dag:
    """Directed graph on vertices ``0..hi`` given by successor lists."""

    adjacency: Tuple[Tuple[int, ...], ...]

    def __init__(self, adjacency):
        adjacency = tuple(tuple(succ) for succ in adjacency)
        if not adjacency:
            raise InvalidGraphError("a graph needs at least one vertex")
        hi = len(adjacency) - 1
        for v, succ in enumerate(adjacency):
            for w in succ:
                if isinstance(w, bool) or not isinstance(w, int) or not 0 <= w <= hi:
                    raise InvalidGraphError(f"edge {v} -> {w!r} leaves the vertex range 0..{hi}")
        object.__setattr__(self, "adjacency", adjacency)

    @classmethod
    def from_edges(cls, hi, edges: Iterable[Edge]):
        """Build a graph the way Haskell's ``buildG`` does.

        Each edge is pushed onto the front of its source's successor list, so
        successors come out in reverse insertion order.
        """
        hi = check_nat(hi, "hi")
        adjacency = [[] for _ in range(hi + 1)]
        for v, w in edges:
            if not 0 <= v <= hi:
                raise InvalidGraphError(f"edge {v} -> {w} leaves the vertex range 0..{hi}")
            adjacency[v].append(w)
        return cls(reversed(succ) for succ in adjacency)

    @property
    def lo(self):
        return 0

    @property
    def hi(self):
        return len(self.adjacency) - 1

    @property
    def bounds(self):
        return (self.lo, self.hi)

    def successors(self, v):
        return self.adjacency[v]

    def edges(self) -> List[Edge]:
        return [(v, w) for v, succ in enumerate(self.adjacency) for w in succ]

    def edge_set(self):
        return set(self.edges())

    def __len__(self):
        return len(self.adjacency)


def nat_to_parts(n):
    """All naturals occurring in the hereditary decomposition of ``n``, sorted."""
    n = check_nat(n)
    parts = {0, n}
    stack = [n]
    while stack:
        for e in nat_to_set(stack.pop()):
            if e not in parts:
                parts.add(e)
                stack.append(e)
    return sorted(parts)


def _containment_edges(n):
    return [(p, e) for p in nat_to_parts(n) for e in nat_to_set(p)]


def nat_to_pairs(orientation, n) -> List[Edge]:
    """Sorted, duplicate-free membership edges among the parts of ``n``."""
    edges = _containment_edges(n)
    if Orientation(orientation) is Orientation.MEMBER:
        edges = [(e, p) for p, e in edges]
    return sorted(edges)


def build_raw_dag(orientation, n):
    """Membership graph whose vertex numbers are the naturals themselves."""
    n = check_nat(n)
    # n is always its own largest part
    if n >= MAX_RAW_DAG_VERTICES:
        raise TooLargeError(
            f"raw graph of {n} would need {n + 1} vertices; limit is {MAX_RAW_DAG_VERTICES}")
    return Dag.from_edges(n, reversed(nat_to_pairs(orientation, n)))


def to_compact_dag(n):
    """Containment graph of ``n`` relabelled onto ``0..len(parts) - 1``.

    Parts are numbered in descending order, so ``n`` becomes vertex 0 and the
    empty set becomes the last vertex.
    """
    parts = nat_to_parts(n)
    label = {p: i for i, p in enumerate(reversed(parts))}
    edges = [(label[p], label[e]) for p, e in nat_to_pairs(Orientation.CONTAINS, n)]
    return Dag.from_edges(len(parts) - 1, edges)


def transpose(g):
    return Dag.from_edges(g.hi, [(w, v) for v, w in g.edges()])


def decorate(g, v):
    """Code of vertex ``v``: ``sum(2 ** decorate(g, s))`` over its successors.

    Sinks decorate to 0.  Shared vertices are computed once; a cycle reachable
    from ``v`` raises :class:`CyclicGraphError`.
    """
    v = check_nat(v, "vertex")
    if v > g.hi:
        raise InvalidGraphError(f"vertex {v} is outside 0..{g.hi}")
    memo = {}
    on_path = set()
    # iterative DFS; each frame is (vertex, index of next successor)
    stack = [(v, 0)]
    on_path.add(v)
    while stack:
        u, i = stack[-1]
        succ = g.adjacency[u]
        if i < len(succ):
            stack[-1] = (u, i + 1)
            w = succ[i]
            if w in memo:
                continue
            if w in on_path:
                raise CyclicGraphError(f"graph has a cycle through vertex {w}")
            on_path.add(w)
            stack.append((w, 0))
            continue
        total = 0
        for w in succ:
            d = memo[w]
            if d >= MAX_RESULT_BITS:
                raise TooLargeError(f"decoration of vertex {u} needs more than 2^{d} bits")
            total += 1 << d
        memo[u] = total
        on_path.discard(u)
        stack.pop()
    return memo[v]


def from_dag(g):
    return decorate(g, g.lo)


def from_ddag(g):
    return decorate(g, g.hi)


def intensional_dual(n):
    """Decoration of the last vertex of the transposed compact graph of ``n``."""
    return from_ddag(transpose(to_compact_dag(n)))


def is_self_dual(n):
    return intensional_dual(n) == n


def self_duals(start, stop):
    """Naturals in the closed range ``[start, stop]`` equal to their dual."""
    start = check_nat(start, "start")
    stop = check_nat(stop, "stop")
    return [n for n in range(start, stop + 1) if is_self_dual(n)]


def nat_to_digraph(n) -> List[Edge]:
    return [tuple(bitmerge_unpair(e)) for e in nat_to_set(n)]


def digraph_to_nat(edges: Iterable[Edge]):
    codes = sorted(bitmerge_pair(x, y) for x, y in edges)
    for a, b in zip(codes, codes[1:]):
        if a == b:
            raise CanonicalFormError(f"duplicate edge {tuple(bitmerge_unpair(a))}")
    return set_to_nat(codes)


def _dot_quote(s):
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def dag_to_dot(g, labels: Optional[Sequence[str]] = None, name="G"):
    """Render ``g`` as Graphviz DOT text, vertices then edges in index order."""
    if labels is not None:
        labels = list(labels)
        if len(labels) != len(g):
            raise InvalidLabelsError(
                f"got {len(labels)} labels for {len(g)} vertices")
    lines = [f"digraph {name} {{"]
    for v in range(len(g)):
        if labels is None:
            lines.append(f"  {v};")
        else:
            lines.append(f"  {v} [label={_dot_quote(str(labels[v]))}];")
    for v, w in g.edges():
        lines.append(f"  {v} -> {w};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def compact_dag_labels(n):
    """Natural-number labels for the vertices of ``to_compact_dag(n)``."""
    return [str(p) for p in reversed(nat_to_parts(n))]


def format_edges(edges: Iterable[Edge]):
    """Edge-list text: one ``"u v"`` line per edge, sorted."""
    return "".join(f"{u} {v}\n" for u, v in sorted(edges))


def parse_edges(text) -> List[Edge]:
    """Parse edge-list text. Blank lines and ``#`` comments are ignored."""
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            raise InvalidGraphError(f"line {lineno}: expected two naturals, got {line!r}")
        edges.append((int(fields[0]), int(fields[1])))
    return edges


def dag_from_edges(edges: Iterable[Edge]):
    """Graph on ``0..max vertex`` holding exactly ``edges``, in the given order."""
    edges = list(edges)
    hi = max((max(e) for e in edges), default=0)
    if hi >= MAX_RAW_DAG_VERTICES:
        raise TooLargeError(f"vertex {hi} exceeds the limit of {MAX_RAW_DAG_VERTICES} vertices")
    adjacency = [[] for _ in range(hi + 1)]
    for v, w in edges:
        adjacency[v].append(w)
    return Dag(adjacency)
