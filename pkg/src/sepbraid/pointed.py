"""Pointed arrangements: a labelled DAG together with a permutation point in its cell.

The point ``p(pi, phi)`` is kept as a pair of topological sorts (``pi`` for
the Re-subgraph, ``phi`` for the Im-subgraph). Inserting an edge repairs the
sort with adjacent transpositions only, so that the motion of the point can
be written in Artin generators.
"""

from __future__ import annotations

import heapq
from fractions import Fraction

from .arrangement import Arrangement, Axis, Edge, closure_bits, permutation_point_in
from .braids import BraidWord, Permutation, PermutationPoint
from .exceptions import ContractViolation


class PointedArrangement:
    """Mutable state ``(G, pi, phi, lifetime)`` with ``G |- p(pi, phi)``."""

    def __init__(self, n: int, pi: Permutation, phi: Permutation):
        self.n = n
        # rank[q][v]: image of vertex v (1-based) under pi (q=0) or phi (q=1)
        self._rank = [list(pi.images), list(phi.images)]
        self._at = [[0] * (n + 1), [0] * (n + 1)]   # position -> vertex
        for q in (0, 1):
            for v, r in enumerate(self._rank[q], start=1):
                self._at[q][r] = v
        self._succ: list[list[set[int]]] = [[set() for _ in range(n + 1)] for _ in (0, 1)]
        self._pred: list[list[set[int]]] = [[set() for _ in range(n + 1)] for _ in (0, 1)]
        self.lifetime: dict[Edge, Fraction] = {}
        self._heap: list = []
        self._reach: list = [None, None]

    @classmethod
    def from_edges(cls, n: int, lifetimes: dict[Edge, Fraction],
                   point: PermutationPoint | None = None) -> PointedArrangement:
        g = Arrangement(n, frozenset(lifetimes))
        if point is None:
            point = permutation_point_in(g)
        state = cls(n, point.pi, point.phi)
        for (i, j, q), life in lifetimes.items():
            state._add(i, j, q, life)
        if not state.is_consistent():
            raise ContractViolation("initial point does not lie in the arrangement cell")
        return state

    # -- views ---------------------------------------------------------------

    @property
    def pi(self) -> Permutation:
        return Permutation(tuple(self._rank[0]))

    @property
    def phi(self) -> Permutation:
        return Permutation(tuple(self._rank[1]))

    @property
    def point(self) -> PermutationPoint:
        return PermutationPoint(self.pi, self.phi)

    def edges(self) -> list[Edge]:
        return sorted(self.lifetime, key=lambda e: (e[0], e[1], e[2].index))

    def arrangement(self) -> Arrangement:
        return Arrangement(self.n, frozenset(self.lifetime))

    def has_edge(self, i: int, j: int, axis: Axis) -> bool:
        return j in self._succ[axis.index][i]

    def successors(self, v: int, axis: Axis) -> set[int]:
        return set(self._succ[axis.index][v])

    def predecessors(self, v: int, axis: Axis) -> set[int]:
        return set(self._pred[axis.index][v])

    def _closure(self, q: int) -> list[int]:
        if self._reach[q] is None:
            succ = [[w - 1 for w in self._succ[q][v]] for v in range(1, self.n + 1)]
            reach = closure_bits(self.n, succ)
            if reach is None:
                raise ContractViolation(f"{Axis(('re', 'im')[q]).value}-subgraph has a cycle")
            self._reach[q] = reach
        return self._reach[q]

    def reaches(self, i: int, j: int, axis: Axis) -> bool:
        return bool(self._closure(axis.index)[i - 1] >> (j - 1) & 1)

    def has_path_avoiding(self, i: int, j: int, axis: Axis) -> bool:
        """Is there an ``axis``-path from ``i`` to ``j`` not using the edge ``(i, j)``?"""
        q = axis.index
        reach = self._closure(q)
        bit = 1 << (j - 1)
        return any(w == j or reach[w - 1] & bit for w in self._succ[q][i] if w != j)

    def is_consistent(self) -> bool:
        """``G |- p(pi, phi)``: both ranks increase along every edge."""
        for (i, j, q) in self.lifetime:
            r = self._rank[q.index]
            if r[i - 1] >= r[j - 1]:
                return False
        return True

    def min_edge(self) -> tuple[Fraction, Edge]:
        """Edge with the smallest lifetime; ties broken by ``(i, j, axis)``."""
        while self._heap:
            life, i, j, q = self._heap[0]
            edge = (i, j, Axis.RE if q == 0 else Axis.IM)
            if self.lifetime.get(edge) == life:
                return life, edge
            heapq.heappop(self._heap)
        raise ContractViolation("empty arrangement")

    def set_lifetime(self, edge: Edge, life: Fraction):
        if edge not in self.lifetime:
            raise ContractViolation(f"unknown edge {edge}")
        self.lifetime[edge] = life
        heapq.heappush(self._heap, (life, edge[0], edge[1], edge[2].index))

    # -- mutation ------------------------------------------------------------

    def _add(self, i: int, j: int, axis: Axis, life: Fraction):
        q = axis.index
        if j not in self._succ[q][i]:
            self._succ[q][i].add(j)
            self._pred[q][j].add(i)
            self._reach[q] = None
        self.lifetime[(i, j, axis)] = life
        heapq.heappush(self._heap, (life, i, j, q))

    def affected_set(self, i: int, j: int, axis: Axis = Axis.RE) -> set[int]:
        """Vertices reachable from ``j`` (including ``j``) ranked below ``rank(i)``.

        Depth-first search pruned at the rank of ``i``.
        """
        q = axis.index
        rank = self._rank[q]
        bound = rank[i - 1]
        seen = {j}
        stack = [j]
        while stack:
            v = stack.pop()
            for w in self._succ[q][v]:
                if w not in seen and rank[w - 1] < bound:
                    if w == i:
                        raise ContractViolation(
                            f"edge ({i}, {j}, {axis.value}) would create a cycle")
                    seen.add(w)
                    stack.append(w)
        return seen

    def _reorder(self, i: int, j: int, axis: Axis) -> list[int]:
        """Move the affected set past ``i`` by adjacent swaps; return the letters."""
        q = axis.index
        rank, at = self._rank[q], self._at[q]
        m, big = rank[j - 1], rank[i - 1]
        if m > big:
            return []
        delta = self.affected_set(i, j, axis)
        other = self._rank[1 - q]
        letters = []
        c = 1
        for x in range(m + 1, big + 1):
            if at[x] in delta:
                c += 1
                continue
            # slide the vertex at x left over the block of c affected vertices
            for y in range(x, x - c, -1):
                u, v = at[y - 1], at[y]
                letters.append(y - 1 if other[u - 1] < other[v - 1] else -(y - 1))
                rank[u - 1], rank[v - 1] = y, y - 1
                at[y - 1], at[y] = v, u
        return letters

    def insert(self, i: int, j: int, axis: Axis, life: Fraction) -> BraidWord:
        """Add ``(i, j, axis)`` and restore ``G |- p(pi, phi)``.

        Returns the braid of the straight-line motion from the old point to the
        new one (always trivial for Im edges, since ``pi`` does not move).
        """
        axis = Axis.parse(axis)
        if i == j:
            raise ContractViolation("loops are not edges")
        if self.reaches(j, i, axis):
            raise ContractViolation(f"edge ({i}, {j}, {axis.value}) would create a cycle")
        letters = self._reorder(i, j, axis)
        self._add(i, j, axis, life)
        if axis is Axis.IM:
            letters = []
        return BraidWord(self.n, tuple(letters))

    def add_implied(self, i: int, j: int, axis: Axis, life: Fraction):
        """Add an edge already implied by transitivity (no reordering needed)."""
        if not self.reaches(i, j, axis):
            raise ContractViolation(f"({i}, {j}, {axis.value}) is not implied")
        self._add(i, j, axis, life)

    def _breaks_comparability(self, i: int, j: int, axis: Axis) -> list[tuple[int, int]]:
        q = axis.index
        reach = self._closure(q)
        ups = [u for u in range(1, self.n + 1) if u == i or reach[u - 1] >> (i - 1) & 1]
        downs = [v for v in range(1, self.n + 1) if v == j or reach[j - 1] >> (v - 1) & 1]
        self._succ[q][i].discard(j)
        self._pred[q][j].discard(i)
        self._reach[q] = None
        try:
            broken = [(u, v) for u in ups for v in downs
                      if not (self.reaches(u, v, axis)
                              or self.reaches(u, v, _other(axis))
                              or self.reaches(v, u, _other(axis)))]
        finally:
            self._succ[q][i].add(j)
            self._pred[q][j].add(i)
            self._reach[q] = None
        return broken

    def delete(self, edge: Edge, check: bool = True):
        """Remove an edge; ``pi`` and ``phi`` stay valid."""
        i, j, axis = edge
        if edge not in self.lifetime:
            raise ContractViolation(f"unknown edge {edge}")
        if check:
            broken = self._breaks_comparability(i, j, axis)
            if broken:
                raise ContractViolation(
                    f"deleting ({i}, {j}, {axis.value}) leaves {broken[0]} incomparable")
        q = axis.index
        self._succ[q][i].discard(j)
        self._pred[q][j].discard(i)
        self._reach[q] = None
        del self.lifetime[edge]

    # -- debugging -----------------------------------------------------------

    def dump_row(self, t: Fraction, word: BraidWord) -> dict:
        """One row of the trace table: graph, ``pi^-1``, ``phi^-1``, braid so far."""
        return {
            "t": str(t),
            "edges": [[i, j, q.value, str(self.lifetime[(i, j, q)])] for i, j, q in self.edges()],
            "pi_inv": self.pi.order(),
            "phi_inv": self.phi.order(),
            "b": list(word.letters),
        }


def _other(axis: Axis) -> Axis:
    return Axis.IM if axis is Axis.RE else Axis.RE
