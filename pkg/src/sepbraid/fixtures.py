"""The four-points-on-a-circle example and random generators for tests and demos.

Four points start at ``2, 2i, -2, -2i`` and turn a quarter of a circle
counterclockwise, so that ``F(0) = sigma . F(1)`` with ``sigma = 2 3 4 1``.
"""

from __future__ import annotations

import json
import math
import random
from fractions import Fraction
from importlib import resources

from .braids import Permutation, PermutationPoint
from .exceptions import InputError
from .paths import PLPath, PLTube, SeparationTable, load_path

CIRCLE_CLOSURE = Permutation((2, 3, 4, 1))

# Permutation points at the two ends of the hand-worked open-path run.
CIRCLE_START_POINT = PermutationPoint(Permutation((4, 3, 1, 2)), Permutation((3, 4, 2, 1)))
CIRCLE_END_POINT = PermutationPoint(Permutation((4, 1, 2, 3)), Permutation((4, 3, 2, 1)))

# (start, end, i_low, j_high, axis) read off the lifetime bars of the
# hand-worked run; every bar is a valid separation for the exact motion.
CIRCLE_BARS = [
    (0, Fraction(1, 5), 1, 2, "im"),
    (Fraction(1, 5), 1, 2, 1, "re"),
    (0, Fraction(4, 5), 3, 1, "re"),
    (Fraction(4, 5), 1, 3, 1, "im"),
    (0, 1, 4, 1, "im"),
    (0, 1, 3, 2, "im"),
    (0, Fraction(3, 5), 4, 2, "im"),
    (Fraction(3, 5), 1, 2, 4, "re"),
    (0, Fraction(2, 5), 4, 3, "im"),
    (Fraction(2, 5), 1, 3, 4, "re"),
]


def circle_table() -> SeparationTable:
    return SeparationTable(4, CIRCLE_BARS)


def _circle_point(angle: float, denominator: int) -> tuple[Fraction, Fraction]:
    return (Fraction(round(2 * math.cos(angle) * denominator), denominator),
            Fraction(round(2 * math.sin(angle) * denominator), denominator))


def circle_tube(segments: int = 32, radius=Fraction(1, 8), denominator: int = 2**16) -> PLTube:
    """Quarter-turn motion enclosed in piecewise-linear tubes.

    Centres are rational roundings of the circle samples; the other strands
    are exact quarter rotations of strand 1, so the closure relation holds
    exactly at the endpoints.
    """
    times = [Fraction(k, segments) for k in range(segments + 1)]
    first = [_circle_point(math.pi / 2 * float(t), denominator) for t in times]
    first[-1] = (Fraction(0), Fraction(2))
    strands = []
    for quarter in range(4):
        pts = []
        for x, y in first:
            for _ in range(quarter):
                x, y = -y, x
            pts.append((x, y))
        strands.append(pts)
    radii = [[Fraction(radius)] * segments for _ in range(4)]
    return PLTube(times, strands, radii)


def bundled_circle_tube() -> PLTube:
    text = resources.files("sepbraid").joinpath("data/circle4.json").read_text()
    return load_path(text)


def random_rational(rng: random.Random, bound: int = 4, max_den: int = 64) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(-bound * den, bound * den), den)


def random_pl_path(rng: random.Random, n: int, pieces: int, max_den: int = 64,
                   bound: int = 4, tries: int = 100) -> PLPath:
    """Random valid path with rational vertices and random rational breakpoints."""
    for _ in range(tries):
        inner = set()
        while len(inner) < pieces - 1:
            den = rng.randint(2, max_den)
            inner.add(Fraction(rng.randint(1, den - 1), den))
        times = [Fraction(0), *sorted(inner), Fraction(1)]
        strands = [[(random_rational(rng, bound, max_den), random_rational(rng, bound, max_den))
                    for _ in times] for _ in range(n)]
        try:
            return PLPath(times, strands)
        except InputError:
            continue
    raise RuntimeError("could not draw a valid path")


def random_generic_path(rng: random.Random, n: int, pieces: int, max_den: int = 64,
                        tries: int = 200) -> PLPath:
    """Random path accepted by the exact oracle (single crossings only)."""
    from .exceptions import NonGenericPathError
    from .oracle import exact_braid

    for _ in range(tries):
        path = random_pl_path(rng, n, pieces, max_den)
        try:
            exact_braid(path)
        except NonGenericPathError:
            continue
        return path
    raise RuntimeError("could not draw a generic path")


def random_pl_tube(rng: random.Random, n: int, pieces: int, max_den: int = 64,
                   tries: int = 200) -> PLTube:
    """Random valid tube family: a random path with small random radii."""
    for _ in range(tries):
        path = random_pl_path(rng, n, pieces, max_den)
        radii = [[Fraction(rng.randint(0, 4), 64) for _ in range(pieces)] for _ in range(n)]
        try:
            return PLTube(path.times, path.strands, radii)
        except InputError:
            continue
    raise RuntimeError("could not draw a valid tube family")


def write_circle_fixture(path) -> None:
    with open(path, "w") as fh:
        json.dump(circle_tube().to_json(), fh, indent=1)
        fh.write("\n")
