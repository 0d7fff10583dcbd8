"""Braids from arrangement sequences, the streaming braid loop, composition and loops."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .arrangement import (
    Arrangement,
    Axis,
    Point,
    intersect,
    is_arrangement,
    point_in_cell,
    permutation_point_in,
    relabel,
)
from .braids import (
    BraidWord,
    Permutation,
    PermutationPoint,
    act_on_point,
    compose as compose_perm,
    concat,
    segment_braid,
)
from .cover import initial_edges
from .exceptions import ClosureError, ContractViolation, EmptyIntersectionError
from .paths import PathApproximation


@dataclass(frozen=True)
class BraidResult:
    """``F(0) -> start_point -(word)-> end_point -> F(1)`` is homotopic to ``F``."""

    start_arrangement: Arrangement
    start_point: PermutationPoint
    word: BraidWord
    end_arrangement: Arrangement
    end_point: PermutationPoint

    def __post_init__(self):
        if not point_in_cell(self.start_arrangement, self.start_point):
            raise ContractViolation("start point outside the start arrangement")
        if not point_in_cell(self.end_arrangement, self.end_point):
            raise ContractViolation("end point outside the end arrangement")

    @property
    def n(self) -> int:
        return self.word.n

    def to_json(self, closed_word: BraidWord | None = None) -> dict:
        data = {
            "word": self.word.to_json(),
            "start": {"arrangement": self.start_arrangement.to_json(), **self.start_point.to_json()},
            "end": {"arrangement": self.end_arrangement.to_json(), **self.end_point.to_json()},
        }
        if closed_word is not None:
            data["closed_word"] = closed_word.to_json()
        return data

    @classmethod
    def from_json(cls, data: dict) -> BraidResult:
        def side(d):
            arr = Arrangement.from_json(d["arrangement"])
            return arr, PermutationPoint(Permutation(tuple(d["pi"])), Permutation(tuple(d["phi"])))

        a0, p0 = side(data["start"])
        a1, p1 = side(data["end"])
        return cls(a0, p0, BraidWord(a0.n, tuple(data["word"])), a1, p1)


def braid_of_cover(arrs: Sequence[Arrangement]) -> BraidResult:
    """Walk through permutation points of consecutive intersections."""
    if not arrs:
        raise ValueError("empty arrangement sequence")
    n = arrs[0].n
    start = permutation_point_in(arrs[0])
    point = start
    words = []
    for k in range(1, len(arrs)):
        meet = intersect(arrs[k - 1], arrs[k])
        if meet is None:
            raise EmptyIntersectionError(f"arrangements {k} and {k + 1} are disjoint", index=k)
        nxt = permutation_point_in(meet)
        words.append(segment_braid(point, nxt))
        point = nxt
    return BraidResult(arrs[0], start, concat(n, words), arrs[-1], point)


TraceHook = Callable[[Fraction, "PointedArrangement", BraidWord], None]


def braid_stream(path: PathApproximation, init: str = "pairs", debug: bool = False,
                 start_point: PermutationPoint | None = None,
                 trace: TraceHook | None = None) -> BraidResult:
    """Single-pass braid computation over a pointed arrangement.

    ``start_point`` overrides the initial permutation point (it must lie in
    the initial arrangement). ``trace`` is called after initialisation and at
    the end of every iteration with ``(t, state, word)``.
    """
    from .pointed import PointedArrangement

    n = path.n
    state = PointedArrangement.from_edges(n, initial_edges(path, init), start_point)
    g0, p0 = state.arrangement(), state.point
    letters: list[int] = []
    t = Fraction(0)
    iterations = 0
    min_step = None
    if trace:
        trace(t, state, BraidWord(n, ()))
    while True:
        t, (i, j, q) = state.min_edge()
        if t >= 1:
            break
        iterations += 1
        if not state.has_path_avoiding(i, j, q):
            res = path.sep(i, j, t)
            step = res.until - t
            min_step = step if min_step is None else min(min_step, step)
            if res.axis is q:
                if (res.i_low, res.j_high) != (i, j):
                    raise ContractViolation(
                        f"sep reversed the {q.value}-order of ({i}, {j}) at t={t}")
                state.set_lifetime((i, j, q), res.until)
                if trace:
                    trace(t, state, BraidWord(n, tuple(letters)))
                continue
            if state.has_edge(*res.edge):
                state.set_lifetime(res.edge, max(res.until, state.lifetime[res.edge]))
            else:
                letters.extend(state.insert(*res.edge, res.until).letters)
            # make the deletion safe: shortcut every path through (i, j, q)
            for k in sorted(state.predecessors(i, q)):
                if not state.has_edge(k, j, q):
                    state.add_implied(k, j, q, t)
            for k in sorted(state.successors(j, q)):
                if not state.has_edge(i, k, q):
                    state.add_implied(i, k, q, t)
        state.delete((i, j, q), check=debug)
        if debug:
            if not is_arrangement(state.arrangement()):
                raise ContractViolation(f"not an arrangement after t={t}")
            if not state.is_consistent():
                raise ContractViolation(f"point left the cell at t={t}")
        if trace:
            trace(t, state, BraidWord(n, tuple(letters)))
    if debug and min_step is not None and iterations > 64 * n * n / min_step:
        raise ContractViolation(f"{iterations} iterations exceed the stall bound")
    return BraidResult(g0, p0, BraidWord(n, tuple(letters)), state.arrangement(), state.point)


def compose(f: BraidResult, g: BraidResult, mode: str = "bridge",
            cell: Arrangement | None = None) -> BraidResult:
    """Braid of the concatenation of two paths with ``F(1) == G(0)``.

    ``direct`` joins ``f.end_point`` to ``g.start_point`` by a straight line;
    both must lie in ``cell`` (default: ``g.start_arrangement``). ``bridge``
    goes through a permutation point of ``f.end_arrangement & g.start_arrangement``.
    """
    if f.n != g.n:
        raise ValueError(f"size mismatch: {f.n} != {g.n}")
    if mode == "direct":
        cell = g.start_arrangement if cell is None else cell
        if not (point_in_cell(cell, f.end_point) and point_in_cell(cell, g.start_point)):
            raise ContractViolation("end and start points do not share the given cell")
        middle = segment_braid(f.end_point, g.start_point)
    elif mode == "bridge":
        meet = intersect(f.end_arrangement, g.start_arrangement)
        if meet is None:
            raise EmptyIntersectionError("end and start arrangements are disjoint")
        via = permutation_point_in(meet)
        middle = segment_braid(f.end_point, via) + segment_braid(via, g.start_point)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return BraidResult(f.start_arrangement, f.start_point, f.word + middle + g.word,
                       g.end_arrangement, g.end_point)


def close_loop(r: BraidResult, sigma: Permutation) -> BraidWord:
    """Close a path with ``F(0) == sigma . F(1)`` into a braid of the loop."""
    if sigma.n != r.n:
        raise ValueError(f"size mismatch: {sigma.n} != {r.n}")
    inv = sigma.inverse()
    target_cell = relabel(inv, r.start_arrangement)
    meet = intersect(r.end_arrangement, target_cell)
    if meet is None:
        raise ClosureError("closure permutation inconsistent with computed cover")
    via = permutation_point_in(meet)
    target = act_on_point(inv, r.start_point)
    return r.word + segment_braid(r.end_point, via) + segment_braid(via, target)


def loop_permutation(r: BraidResult, sigma: Permutation) -> Permutation:
    """Strand permutation of the closed braid: ``pi0 sigma^-1 pi0^-1``."""
    pi0 = r.start_point.pi
    return compose_perm(compose_perm(pi0, sigma.inverse()), pi0.inverse())


def canonical_point(z: Sequence[Point]) -> PermutationPoint:
    """Permutation point lying in every arrangement cell that contains ``z``.

    Real ranks follow the lexicographic order (Re, then Im); imaginary ranks
    follow (Im, then Re).
    """
    n = len(z)
    by_lex = sorted(range(n), key=lambda k: (z[k][0], z[k][1]))
    by_im = sorted(range(n), key=lambda k: (z[k][1], z[k][0]))
    return PermutationPoint(Permutation.from_order([k + 1 for k in by_lex]),
                            Permutation.from_order([k + 1 for k in by_im]))


def bridge_to_canonical(r: BraidResult, z0: Sequence[Point], z1: Sequence[Point]) -> BraidWord:
    """Express ``r`` in the convention of lexicographic canonical paths.

    The result is comparable with the exact braid of a path from ``z0`` to ``z1``.
    """
    c0, c1 = canonical_point(z0), canonical_point(z1)
    return segment_braid(c0, r.start_point) + r.word + segment_braid(r.end_point, c1)


def identity_result(arrangement: Arrangement, point: PermutationPoint) -> BraidResult:
    return BraidResult(arrangement, point, BraidWord(arrangement.n, ()), arrangement, point)
