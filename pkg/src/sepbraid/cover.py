"""Arrangement sequences covering a path, driven only by ``sep`` queries."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .arrangement import Arrangement, Axis, Edge, incomparable_pairs, is_arrangement
from .exceptions import ContractViolation
from .paths import PathApproximation


@dataclass(frozen=True)
class CoverStep:
    """Arrangement ``arrangement`` contains ``F(s)`` for all ``s`` in ``[start, end]``."""

    arrangement: Arrangement
    start: Fraction
    end: Fraction


def _edge_key(edge: Edge):
    i, j, q = edge
    return (i, j, q.index)


def sorted_initial_edges(path: PathApproximation) -> dict[Edge, Fraction] | None:
    """Chain of Re edges obtained by sorting ``F(0)`` with ``sep``.

    Returns ``None`` as soon as ``sep`` answers with an Im separation, in
    which case the caller falls back to querying all pairs.
    """
    answers = {}

    class _ImAnswer(Exception):
        pass

    def cmp(a, b):
        res = path.sep(a, b, Fraction(0))
        if res.axis is not Axis.RE:
            raise _ImAnswer
        answers[(res.i_low, res.j_high)] = res.until
        return -1 if res.i_low == a else 1

    try:
        order = sorted(range(1, path.n + 1), key=functools.cmp_to_key(cmp))
    except _ImAnswer:
        return None
    edges = {}
    for a, b in zip(order, order[1:]):
        until = answers.get((a, b))
        if until is None:
            res = path.sep(a, b, Fraction(0))
            if res.axis is not Axis.RE or res.i_low != a:
                return None
            until = res.until
        edges[(a, b, Axis.RE)] = until
    return edges


def initial_edges(path: PathApproximation, init: str = "pairs") -> dict[Edge, Fraction]:
    if init == "sorted":
        edges = sorted_initial_edges(path)
        if edges is not None:
            return edges
    elif init != "pairs":
        raise ValueError(f"unknown initialisation {init!r}")
    edges = {}
    for i in range(1, path.n + 1):
        for j in range(i + 1, path.n + 1):
            res = path.sep(i, j, Fraction(0))
            edges[res.edge] = res.until
    return edges


def cover_steps(path: PathApproximation, init: str = "pairs", debug: bool = False) -> list[CoverStep]:
    """Run the covering loop and keep the validity interval of each snapshot."""
    n = path.n
    lifetime = initial_edges(path, init)
    steps: list[CoverStep] = []
    t = Fraction(0)
    last_state = None
    while t < 1:
        g = Arrangement(n, frozenset(lifetime))
        pairs = incomparable_pairs(g)
        while pairs:
            i, j = pairs[0]
            res = path.sep(i, j, t)
            lifetime[res.edge] = max(res.until, lifetime.get(res.edge, res.until))
            g = Arrangement(n, frozenset(lifetime))
            pairs = incomparable_pairs(g)
        if debug:
            state = (t, frozenset(lifetime.items()))
            if state == last_state:
                raise ContractViolation(f"cover loop stalled at t={t}")
            last_state = state
            if not is_arrangement(g):
                raise ContractViolation(f"snapshot at t={t} is not an arrangement")
        expiring = min(lifetime, key=lambda e: (lifetime[e], _edge_key(e)))
        end = lifetime.pop(expiring)
        steps.append(CoverStep(g, t, end))
        t = end
    return steps


def cover(path: PathApproximation, init: str = "pairs", debug: bool = False) -> list[Arrangement]:
    """Sequence of arrangements covering the path."""
    return [step.arrangement for step in cover_steps(path, init=init, debug=debug)]
