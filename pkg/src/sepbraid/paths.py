"""Path approximations given through a separation predicate.

Every backend exposes ``n`` and ``sep(i, j, t)``. The answer
``SepResult(i_low, j_high, axis, until)`` guarantees
``axis(F_{i_low}(s)) < axis(F_{j_high}(s))`` for every ``s`` in ``[t, until]``.

Backends:

* :class:`PLPath` - exact piecewise-linear strands with rational vertices.
* :class:`PLTube` - piecewise-linear centres inflated by a per-segment radius;
  the predicate compares interval hulls and halves the horizon on failure.
* :class:`SeparationTable` - explicit separation intervals per pair.

All arithmetic is done with :class:`fractions.Fraction`.
"""

from __future__ import annotations

import bisect
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Protocol, Sequence, runtime_checkable

from .arrangement import Axis, Point
from .exceptions import InputError, SepError

Box = tuple[Fraction, Fraction, Fraction, Fraction]  # re_lo, re_hi, im_lo, im_hi

TUBE_DELTA_FLOOR = Fraction(1, 2**64)


def to_fraction(value, allow_decimal: bool = False) -> Fraction:
    """Parse ``"p/q"``, integers, or (optionally) floats converted exactly."""
    if isinstance(value, bool):
        raise InputError(f"not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not allow_decimal:
            raise InputError(f"decimal value {value!r} rejected; write it as 'p/q'")
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not allow_decimal and any(c in text for c in ".eE"):
            raise InputError(f"decimal value {value!r} rejected; write it as 'p/q'")
        try:
            if allow_decimal and any(c in text for c in ".eE") and "/" not in text:
                return Fraction(float(text))
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational: {value!r}") from exc
    raise InputError(f"not a rational: {value!r}")


def fraction_to_json(x: Fraction):
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class SepResult:
    i_low: int
    j_high: int
    axis: Axis
    until: Fraction

    @property
    def edge(self) -> tuple[int, int, Axis]:
        return (self.i_low, self.j_high, self.axis)


@runtime_checkable
class PathApproximation(Protocol):
    n: int

    def sep(self, i: int, j: int, t: Fraction) -> SepResult: ...


def _check_query(n: int, i: int, j: int, t: Fraction):
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise SepError(f"bad pair ({i}, {j}) for n={n}", pair=(i, j), time=t)
    if not 0 <= t < 1:
        raise SepError(f"query time {t} outside [0, 1)", pair=(i, j), time=t)


def _parse_times(times, allow_decimal) -> tuple[Fraction, ...]:
    ts = tuple(to_fraction(x, allow_decimal) for x in times)
    if len(ts) < 2 or ts[0] != 0 or ts[-1] != 1:
        raise InputError("times must start at 0 and end at 1")
    if any(a >= b for a, b in zip(ts, ts[1:])):
        raise InputError("times must be strictly increasing")
    return ts


def _linear_root(a0: Fraction, a1: Fraction, s0: Fraction, s1: Fraction):
    """Root of the affine map with values ``a0`` at ``s0`` and ``a1`` at ``s1``."""
    return s0 + (s1 - s0) * a0 / (a0 - a1)


class _PiecewiseLinear:
    """Shared machinery: ``times`` and per-strand vertex lists."""

    n: int
    times: tuple[Fraction, ...]
    strands: tuple[tuple[Point, ...], ...]

    def piece(self, s: Fraction) -> int:
        m = bisect.bisect_right(self.times, s) - 1
        return min(max(m, 0), len(self.times) - 2)

    def evaluate(self, k: int, s: Fraction) -> Point:
        """Position of strand ``k`` (1-based) at time ``s``."""
        m = self.piece(s)
        t0, t1 = self.times[m], self.times[m + 1]
        (x0, y0), (x1, y1) = self.strands[k - 1][m], self.strands[k - 1][m + 1]
        u = (s - t0) / (t1 - t0)
        return (x0 + u * (x1 - x0), y0 + u * (y1 - y0))

    def configuration(self, s: Fraction) -> list[Point]:
        return [self.evaluate(k, s) for k in range(1, self.n + 1)]

    def start_configuration(self) -> list[Point]:
        return [strand[0] for strand in self.strands]

    def end_configuration(self) -> list[Point]:
        return [strand[-1] for strand in self.strands]

    def difference(self, i: int, j: int, axis: Axis, s: Fraction) -> Fraction:
        c = axis.index
        return self.evaluate(j, s)[c] - self.evaluate(i, s)[c]

    def first_zero(self, i: int, j: int, axis: Axis, t: Fraction):
        """First ``s > t`` where ``axis(F_j - F_i)`` vanishes, or ``None``.

        The difference must be nonzero at ``t``.
        """
        m = self.piece(t)
        s0 = t
        d0 = self.difference(i, j, axis, t)
        for k in range(m, len(self.times) - 1):
            s1 = self.times[k + 1]
            if s1 <= s0:
                continue
            d1 = self.difference(i, j, axis, s1)
            if d1 == 0:
                return s1
            if (d0 > 0) != (d1 > 0):
                return _linear_root(d0, d1, s0, s1)
            s0, d0 = s1, d1
        return None


def _parse_strands(n, strands, r, allow_decimal):
    if len(strands) != n:
        raise InputError(f"expected {n} strands, got {len(strands)}")
    out = []
    for strand in strands:
        if len(strand) != r + 1:
            raise InputError(f"each strand needs {r + 1} vertices")
        out.append(tuple((to_fraction(p[0], allow_decimal), to_fraction(p[1], allow_decimal))
                         for p in strand))
    return tuple(out)


class PLPath(_PiecewiseLinear):
    """Exact piecewise-linear motion of ``n`` points on ``[0, 1]``."""

    def __init__(self, times: Sequence, strands: Sequence, validate: bool = True,
                 allow_decimal: bool = False):
        self.times = _parse_times(times, allow_decimal)
        self.n = len(strands)
        if self.n < 1:
            raise InputError("a path needs at least one strand")
        self.strands = _parse_strands(self.n, strands, len(self.times) - 1, allow_decimal)
        if validate:
            self.validate()

    def __repr__(self):
        return f"PLPath(n={self.n}, pieces={len(self.times) - 1})"

    def collisions(self) -> list[tuple[int, int, Fraction]]:
        """Times where two strands coincide (empty for a path in OC_n)."""
        found = []
        for m in range(len(self.times) - 1):
            t0, t1 = self.times[m], self.times[m + 1]
            for i in range(self.n):
                for j in range(i + 1, self.n):
                    hit = _segment_collision(self.strands[i][m], self.strands[i][m + 1],
                                             self.strands[j][m], self.strands[j][m + 1])
                    if hit is not None:
                        found.append((i + 1, j + 1, t0 + hit * (t1 - t0)))
        return found

    def validate(self):
        bad = self.collisions()
        if bad:
            i, j, s = bad[0]
            raise InputError(f"strands {i} and {j} collide at t={s}")

    def sep(self, i: int, j: int, t) -> SepResult:
        return sep_exact(self, i, j, Fraction(t))

    def restrict(self, a, b) -> PLPath:
        """The motion on ``[a, b]`` reparametrised to ``[0, 1]``."""
        a, b = Fraction(a), Fraction(b)
        if not 0 <= a < b <= 1:
            raise ValueError("need 0 <= a < b <= 1")
        inner = [s for s in self.times if a < s < b]
        old = [a, *inner, b]
        new = [(s - a) / (b - a) for s in old]
        strands = [[self.evaluate(k, s) for s in old] for k in range(1, self.n + 1)]
        return PLPath(new, strands, validate=False)

    def reverse(self) -> PLPath:
        times = [1 - s for s in reversed(self.times)]
        return PLPath(times, [list(reversed(st)) for st in self.strands], validate=False)

    def refine(self, extra: Sequence) -> PLPath:
        """Insert collinear breakpoints (same motion, more pieces)."""
        times = sorted(set(self.times) | {Fraction(s) for s in extra})
        strands = [[self.evaluate(k, s) for s in times] for k in range(1, self.n + 1)]
        return PLPath(times, strands, validate=False)

    def translate(self, dx, dy) -> PLPath:
        dx, dy = Fraction(dx), Fraction(dy)
        return PLPath(self.times, [[(x + dx, y + dy) for x, y in st] for st in self.strands],
                      validate=False)

    def to_json(self) -> dict:
        return {
            "kind": "pl_path",
            "n": self.n,
            "times": [fraction_to_json(s) for s in self.times],
            "strands": [[[fraction_to_json(x), fraction_to_json(y)] for x, y in st]
                        for st in self.strands],
        }


def _segment_collision(p0, p1, q0, q1):
    """Parameter ``u`` in [0, 1] where ``p(u) == q(u)``, else ``None``."""
    ax, ay = q0[0] - p0[0], q0[1] - p0[1]
    bx = (q1[0] - p1[0]) - ax
    by = (q1[1] - p1[1]) - ay
    # difference is (ax + u bx, ay + u by)
    if bx != 0:
        u = -ax / bx
        return u if 0 <= u <= 1 and ay + u * by == 0 else None
    if ax != 0:
        return None
    if by != 0:
        u = -ay / by
        return u if 0 <= u <= 1 else None
    return Fraction(0) if ay == 0 else None


def sep_exact(path: PLPath, i: int, j: int, t: Fraction) -> SepResult:
    """Exact separation with the midpoint rule.

    Among the axes separating ``i`` and ``j`` at ``t``, pick the one whose
    next crossing ``t_c`` is furthest (ties favour Re); answer ``until = 1``
    when it never crosses again, else ``(t + t_c) / 2``.
    """
    t = Fraction(t)
    _check_query(path.n, i, j, t)
    best = None
    for axis in Axis:
        d = path.difference(i, j, axis, t)
        if d == 0:
            continue
        tc = path.first_zero(i, j, axis, t)
        key = float("inf") if tc is None else tc
        if best is None or key > best[0]:
            best = (key, axis, d, tc)
    if best is None:
        raise SepError(f"strands {i} and {j} coincide at t={t}", pair=(i, j), time=t)
    _, axis, d, tc = best
    until = Fraction(1) if tc is None else (t + tc) / 2
    lo, hi = (i, j) if d > 0 else (j, i)
    return SepResult(lo, hi, axis, until)


class PLTube(_PiecewiseLinear):
    """Piecewise-linear tubes: box ``center(s) +- radius`` around each strand."""

    def __init__(self, times: Sequence, centers: Sequence, radii: Sequence,
                 validate: bool = True, allow_decimal: bool = False):
        self.times = _parse_times(times, allow_decimal)
        self.n = len(centers)
        if self.n < 1:
            raise InputError("a tube family needs at least one strand")
        r = len(self.times) - 1
        self.strands = _parse_strands(self.n, centers, r, allow_decimal)
        if len(radii) != self.n or any(len(row) != r for row in radii):
            raise InputError(f"radii must be {self.n} rows of {r} values")
        self.radii = tuple(tuple(to_fraction(x, allow_decimal) for x in row) for row in radii)
        if any(x < 0 for row in self.radii for x in row):
            raise InputError("radii must be nonnegative")
        if validate:
            self.validate()

    def __repr__(self):
        return f"PLTube(n={self.n}, pieces={len(self.times) - 1})"

    @property
    def centers(self):
        return self.strands

    def touched_segments(self, a: Fraction, b: Fraction) -> range:
        """Segments whose closed time interval meets ``[a, b]``."""
        lo = bisect.bisect_left(self.times, a)
        first = max(lo - 1, 0)
        last = min(bisect.bisect_right(self.times, b) - 1, len(self.times) - 2)
        return range(first, last + 1)

    def point_box(self, k: int, s: Fraction) -> Box:
        return interval_eval(self, k, s, s)

    def overlaps(self) -> list[tuple[int, int, Fraction, Fraction]]:
        """Segments where instantaneous boxes of two strands may meet."""
        bad = []
        for m in range(len(self.times) - 1):
            t0, t1 = self.times[m], self.times[m + 1]
            for i in range(self.n):
                for j in range(i + 1, self.n):
                    rad = self.radii[i][m] + self.radii[j][m]
                    lo, hi = Fraction(0), Fraction(1)
                    for c in (0, 1):
                        a = self.strands[j][m][c] - self.strands[i][m][c]
                        b = (self.strands[j][m + 1][c] - self.strands[i][m + 1][c]) - a
                        seg = _abs_le_interval(a, b, rad)
                        if seg is None:
                            lo, hi = Fraction(1), Fraction(0)
                            break
                        lo, hi = max(lo, seg[0]), min(hi, seg[1])
                    if lo <= hi:
                        bad.append((i + 1, j + 1, t0 + lo * (t1 - t0), t0 + hi * (t1 - t0)))
        for m in range(1, len(self.times) - 1):
            s = self.times[m]
            for i in range(1, self.n + 1):
                for j in range(i + 1, self.n + 1):
                    if not _boxes_disjoint(self.point_box(i, s), self.point_box(j, s)):
                        bad.append((i, j, s, s))
        return bad

    def validate(self):
        bad = self.overlaps()
        if bad:
            i, j, a, b = bad[0]
            raise InputError(f"tubes {i} and {j} overlap for t in [{a}, {b}]")

    def sep(self, i: int, j: int, t) -> SepResult:
        return sep_tube(self, i, j, Fraction(t))

    def center_path(self) -> PLPath:
        return PLPath(self.times, self.strands)

    def to_json(self) -> dict:
        data = {
            "kind": "pl_tube",
            "n": self.n,
            "times": [fraction_to_json(s) for s in self.times],
            "strands": [[[fraction_to_json(x), fraction_to_json(y)] for x, y in st]
                        for st in self.strands],
            "radii": [[fraction_to_json(x) for x in row] for row in self.radii],
        }
        return data


def _abs_le_interval(a: Fraction, b: Fraction, rad: Fraction):
    """``{u in [0, 1] : |a + b u| <= rad}`` as ``(lo, hi)`` or ``None``."""
    if b == 0:
        return (Fraction(0), Fraction(1)) if abs(a) <= rad else None
    u1, u2 = (-rad - a) / b, (rad - a) / b
    lo, hi = max(min(u1, u2), Fraction(0)), min(max(u1, u2), Fraction(1))
    return (lo, hi) if lo <= hi else None


def _boxes_disjoint(x: Box, y: Box) -> bool:
    return x[1] < y[0] or y[1] < x[0] or x[3] < y[2] or y[3] < x[2]


def interval_eval(tube: PLTube, k: int, a, b) -> Box:
    """Box enclosing strand ``k`` of the tube over the time interval ``[a, b]``."""
    a, b = Fraction(a), Fraction(b)
    if a > b or a < 0 or b > 1:
        raise ValueError(f"bad time interval [{a}, {b}]")
    samples = [a, b] + [s for s in tube.times if a < s < b]
    pts = [tube.evaluate(k, s) for s in samples]
    rad = max(tube.radii[k - 1][m] for m in tube.touched_segments(a, b))
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    return (min(xs) - rad, max(xs) + rad, min(ys) - rad, max(ys) + rad)


def sep_tube(tubes: PLTube, i: int, j: int, t: Fraction) -> SepResult:
    """Interval separation: try the horizon ``1 - t`` and halve it until the hulls separate."""
    t = Fraction(t)
    _check_query(tubes.n, i, j, t)
    delta = 1 - t
    floor = (1 - t) * TUBE_DELTA_FLOOR
    while delta >= floor:
        xi = interval_eval(tubes, i, t, t + delta)
        xj = interval_eval(tubes, j, t, t + delta)
        until = t + delta
        if xi[1] < xj[0]:
            return SepResult(i, j, Axis.RE, until)
        if xj[1] < xi[0]:
            return SepResult(j, i, Axis.RE, until)
        if xi[3] < xj[2]:
            return SepResult(i, j, Axis.IM, until)
        if xj[3] < xi[2]:
            return SepResult(j, i, Axis.IM, until)
        delta /= 2
    raise SepError(f"tubes {i} and {j} cannot be separated at t={t}", pair=(i, j), time=t)


class SeparationTable:
    """Separation data given explicitly as intervals per pair.

    ``entries`` lists ``(start, end, i_low, j_high, axis)``: on ``[start, end]``
    the coordinate ``axis`` of ``i_low`` stays below that of ``j_high``. Every
    pair must be covered on ``[0, 1]``.
    """

    def __init__(self, n: int, entries: Sequence):
        self.n = n
        self.table: dict[tuple[int, int], list] = {}
        for start, end, lo, hi, axis in entries:
            start, end = Fraction(start), Fraction(end)
            if not 0 <= start < end <= 1:
                raise InputError(f"bad interval [{start}, {end}]")
            key = (min(lo, hi), max(lo, hi))
            self.table.setdefault(key, []).append((start, end, lo, hi, Axis.parse(axis)))

    def sep(self, i: int, j: int, t) -> SepResult:
        t = Fraction(t)
        _check_query(self.n, i, j, t)
        rows = [r for r in self.table.get((min(i, j), max(i, j)), []) if r[0] <= t < r[1]]
        if not rows:
            raise SepError(f"no separation recorded for ({i}, {j}) at t={t}",
                           pair=(i, j), time=t)
        start, end, lo, hi, axis = max(rows, key=lambda r: (r[1], -r[4].index))
        return SepResult(lo, hi, axis, end)


def load_path(data, allow_decimal: bool = False):
    """Build a :class:`PLPath` or :class:`PLTube` from parsed or raw JSON."""
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError("path document must be a JSON object")
    try:
        kind = data["kind"]
        n = int(data["n"])
        times, strands = data["times"], data["strands"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"missing or invalid field: {exc}") from exc
    if len(strands) != n:
        raise InputError(f"n={n} but {len(strands)} strands given")
    if kind == "pl_path":
        return PLPath(times, strands, allow_decimal=allow_decimal)
    if kind == "pl_tube":
        radii = data.get("radii")
        if radii is None:
            radii = [[0] * (len(times) - 1) for _ in range(n)]
        return PLTube(times, strands, radii, allow_decimal=allow_decimal)
    raise InputError(f"unknown path kind {kind!r}")
