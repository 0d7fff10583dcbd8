"""Exact braids of generic piecewise-linear paths, by tracking the lexicographic order.

Used as ground truth: it reads exact coordinates, never ``sep``.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .arrangement import Point
from .braids import BraidWord, Permutation, compose
from .exceptions import NonGenericPathError
from .paths import PLPath


def ord_permutation(z: Sequence[Point]) -> Permutation:
    """Permutation ``o`` with ``o . z`` sorted lexicographically: ``o(k)`` is the rank of ``z_k``."""
    if len(set(z)) != len(z):
        raise ValueError("configuration has coinciding points")
    order = sorted(range(len(z)), key=lambda k: (z[k][0], z[k][1]))
    return Permutation.from_order([k + 1 for k in order])


def discontinuity_times(path: PLPath) -> list[Fraction]:
    """Times where two real parts meet: isolated roots and ends of flat stretches."""
    found = set()
    times = path.times
    for m in range(len(times) - 1):
        t0, t1 = times[m], times[m + 1]
        for i in range(path.n):
            for j in range(i + 1, path.n):
                a0 = path.strands[j][m][0] - path.strands[i][m][0]
                a1 = path.strands[j][m + 1][0] - path.strands[i][m + 1][0]
                if a0 == 0 and a1 == 0:
                    found.update((t0, t1))
                elif a0 == 0:
                    found.add(t0)
                elif a1 == 0:
                    found.add(t1)
                elif (a0 > 0) != (a1 > 0):
                    found.add(t0 + (t1 - t0) * a0 / (a0 - a1))
    return sorted(found)


def _flat_real_stretch(path: PLPath):
    for m in range(len(path.times) - 1):
        for i in range(path.n):
            for j in range(i + 1, path.n):
                if (path.strands[i][m][0] == path.strands[j][m][0]
                        and path.strands[i][m + 1][0] == path.strands[j][m + 1][0]):
                    return path.times[m], (i + 1, j + 1)
    return None


def exact_braid(path: PLPath) -> BraidWord:
    """Braid of a generic path in the lexicographic canonical-path convention.

    Between consecutive event times the real parts are pairwise distinct, so
    the order is read at midpoints. Each change must be one adjacent swap; its
    sign is that of ``Im`` (right point minus left point) at the event.
    """
    flat = _flat_real_stretch(path)
    if flat is not None:
        raise NonGenericPathError(f"strands {flat[1]} share a real part on a whole piece",
                                  time=flat[0], pairs=[flat[1]])
    events = sorted(set(discontinuity_times(path)) | {Fraction(0), Fraction(1)})
    alpha = ord_permutation(path.configuration(Fraction(0)))
    letters: list[int] = []

    def step(alpha: Permutation, beta: Permutation, t: Fraction) -> Permutation:
        change = compose(beta, alpha.inverse())
        moved = [k for k in range(1, path.n + 1) if change(k) != k]
        if not moved:
            return alpha
        if len(moved) != 2 or moved[1] != moved[0] + 1:
            pairs = [(alpha.inverse()(k), beta.inverse()(k)) for k in moved]
            raise NonGenericPathError(f"simultaneous crossings at t={t}", time=t, pairs=pairs)
        jj = moved[0]
        left, right = alpha.inverse()(jj), alpha.inverse()(jj + 1)
        dy = path.evaluate(right, t)[1] - path.evaluate(left, t)[1]
        if dy == 0:
            raise NonGenericPathError(f"strands {left} and {right} collide at t={t}",
                                      time=t, pairs=[(left, right)])
        letters.append(jj if dy > 0 else -jj)
        return beta

    for a, b in zip(events, events[1:]):
        beta = ord_permutation(path.configuration((a + b) / 2))
        alpha = step(alpha, beta, a)
    alpha = step(alpha, ord_permutation(path.configuration(Fraction(1))), Fraction(1))
    return BraidWord(path.n, tuple(letters))


def perturb(path: PLPath, rng: random.Random, scale=Fraction(1, 1024)) -> PLPath:
    """Jitter every vertex by a small random rational (to escape degeneracies)."""
    scale = Fraction(scale)
    strands = [[(x + scale * Fraction(rng.randint(-64, 64), 64),
                 y + scale * Fraction(rng.randint(-64, 64), 64)) for x, y in st]
               for st in path.strands]
    return PLPath(path.times, strands)
