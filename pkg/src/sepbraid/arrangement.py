"""Arrangements: pairs of strict partial orders stored as Re/Im-labelled DAGs.

An edge ``(i, j, axis)`` states ``axis(z_i) < axis(z_j)``. The partial orders
are the reachability relations of the two labelled subgraphs. Points are
numbered from 1.
"""

from __future__ import annotations

import enum
import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .braids import Permutation, PermutationPoint


class Axis(enum.Enum):
    RE = "re"
    IM = "im"

    def __lt__(self, other):
        return self is Axis.RE and other is Axis.IM

    @property
    def index(self) -> int:
        return 0 if self is Axis.RE else 1

    @classmethod
    def parse(cls, value) -> Axis:
        if isinstance(value, Axis):
            return value
        return cls(str(value).lower())

    def __repr__(self):
        return f"Axis.{self.name}"


Edge = tuple[int, int, Axis]

# An exact point is a pair (re, im) of rationals.
Point = tuple[Fraction, Fraction]


def closure_bits(n: int, succ: Sequence[Iterable[int]]) -> list[int] | None:
    """Reachability bitsets (bit k of ``out[v]`` set iff v reaches k in >= 1 step).

    ``succ[v]`` lists successors of vertex ``v`` (0-based). Returns ``None``
    when the graph has a cycle.
    """
    indeg = [0] * n
    for v in range(n):
        for w in succ[v]:
            indeg[w] += 1
    order = [v for v in range(n) if indeg[v] == 0]
    k = 0
    while k < len(order):
        v = order[k]
        k += 1
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                order.append(w)
    if len(order) < n:
        return None
    reach = [0] * n
    for v in reversed(order):
        bits = 0
        for w in succ[v]:
            bits |= (1 << w) | reach[w]
        reach[v] = bits
    return reach


def topological_order(n: int, succ: Sequence[Iterable[int]]) -> list[int]:
    """Kahn's algorithm, smallest available vertex first (0-based)."""
    indeg = [0] * n
    for v in range(n):
        for w in succ[v]:
            indeg[w] += 1
    heap = [v for v in range(n) if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    if len(order) < n:
        raise ValueError("graph has a cycle")
    return order


@dataclass(frozen=True)
class Arrangement:
    """Immutable labelled graph on ``{1..n}``; see :func:`is_arrangement`."""

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        edges = frozenset((int(i), int(j), Axis.parse(q)) for i, j, q in self.edges)
        for i, j, _ in edges:
            if not (1 <= i <= self.n and 1 <= j <= self.n) or i == j:
                raise ValueError(f"bad edge ({i}, {j}) for n={self.n}")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> Arrangement:
        return cls(n, frozenset(edges))

    def successors(self, axis: Axis) -> list[list[int]]:
        succ: list[list[int]] = [[] for _ in range(self.n)]
        for i, j, q in self.sorted_edges():
            if q is axis:
                succ[i - 1].append(j - 1)
        return succ

    @cached_property
    def _closure(self) -> tuple[list[int] | None, list[int] | None]:
        return (closure_bits(self.n, self.successors(Axis.RE)),
                closure_bits(self.n, self.successors(Axis.IM)))

    def is_acyclic(self) -> bool:
        re, im = self._closure
        return re is not None and im is not None

    def precedes(self, i: int, j: int, axis: Axis) -> bool:
        """``i <_axis j`` in the partial order (requires acyclicity)."""
        reach = self._closure[axis.index]
        if reach is None:
            raise ValueError(f"{axis.value}-subgraph has a cycle")
        return bool(reach[i - 1] >> (j - 1) & 1)

    def comparable(self, i: int, j: int) -> bool:
        return any(self.precedes(a, b, q) for q in Axis for a, b in ((i, j), (j, i)))

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges, key=lambda e: (e[0], e[1], e[2].index))

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [[i, j, q.value] for i, j, q in self.sorted_edges()]}

    @classmethod
    def from_json(cls, data: dict) -> Arrangement:
        return cls(int(data["n"]), frozenset((i, j, Axis.parse(q)) for i, j, q in data["edges"]))

    def __str__(self):
        parts = [f"{i}<{j}:{q.value}" for i, j, q in self.sorted_edges()]
        return "{" + ", ".join(parts) + "}"


def incomparable_pairs(g: Arrangement) -> list[tuple[int, int]]:
    if not g.is_acyclic():
        raise ValueError("labelled subgraphs must be acyclic")
    return [(i, j) for i in range(1, g.n + 1) for j in range(i + 1, g.n + 1)
            if not g.comparable(i, j)]


def is_arrangement(g: Arrangement) -> bool:
    return g.is_acyclic() and not incomparable_pairs(g)


def intersect(a: Arrangement, b: Arrangement) -> Arrangement | None:
    """Arrangement of the intersection of two cells, ``None`` when disjoint."""
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} != {b.n}")
    union = Arrangement(a.n, a.edges | b.edges)
    return union if union.is_acyclic() else None


def relabel(sigma: Permutation, a: Arrangement) -> Arrangement:
    """Arrangement ``sigma A``: ``z`` in ``A`` iff ``sigma . z`` in ``sigma A``."""
    if sigma.n != a.n:
        raise ValueError(f"size mismatch: {sigma.n} != {a.n}")
    return Arrangement(a.n, frozenset((sigma(i), sigma(j), q) for i, j, q in a.edges))


def permutation_point_in(a: Arrangement) -> PermutationPoint:
    """Permutation point of the cell: deterministic topological sorts of both subgraphs."""
    ranks = []
    for axis in Axis:
        order = topological_order(a.n, a.successors(axis))
        ranks.append(Permutation.from_order([v + 1 for v in order]))
    return PermutationPoint(ranks[0], ranks[1])


def point_in_cell(a: Arrangement, p: PermutationPoint) -> bool:
    if p.n != a.n:
        raise ValueError(f"size mismatch: {p.n} != {a.n}")
    for i, j, q in a.edges:
        perm = p.pi if q is Axis.RE else p.phi
        if perm(i) >= perm(j):
            return False
    return True


def embed(p: PermutationPoint) -> list[Point]:
    return [(Fraction(x), Fraction(y)) for x, y in p.coordinates()]


def config_in_cell(a: Arrangement, z: Sequence[Point]) -> bool:
    """Exact membership test over the full reachability relations."""
    if len(z) != a.n:
        raise ValueError(f"size mismatch: {len(z)} != {a.n}")
    if not a.is_acyclic():
        return False
    for q in Axis:
        c = q.index
        for i in range(1, a.n + 1):
            for j in range(1, a.n + 1):
                if i != j and a.precedes(i, j, q) and not z[i - 1][c] < z[j - 1][c]:
                    return False
    return True


def arrangement_of_configuration(z: Sequence[Point]) -> Arrangement:
    n = len(z)
    edges = set()
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if z[i] == z[j]:
                raise ValueError(f"points {i + 1} and {j + 1} coincide")
            for q in Axis:
                if z[i][q.index] < z[j][q.index]:
                    edges.add((i + 1, j + 1, q))
    return Arrangement(n, frozenset(edges))
