"""Permutations, braid words, permutation points and elementary braids.

Conventions used throughout the package:

* A :class:`Permutation` stores its images ``(p(1), ..., p(n))`` with values
  in ``1..n``. Composition is ``(a * b)(k) = a(b(k))``.
* A :class:`BraidWord` is a tuple of nonzero integers; ``g > 0`` is the Artin
  generator ``sigma_g`` and ``g < 0`` its inverse. Words are read left to right,
  the leftmost letter happening first.
* ``permutation_of_braid(w)`` maps ``sigma_g`` to the adjacent transposition
  ``(g g+1)`` and a word ``g1 g2 ... gk`` to ``t_g1 * t_g2 * ... * t_gk``. With
  this choice ``permutation_of_braid(elementary_braid(pi, phi)) == pi``.

Braid equality is decided with the left-greedy Garside normal form, simple
elements being represented by permutations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{1, ..., n}`` given by its array of images."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(k) for k in self.images)
        object.__setattr__(self, "images", images)
        if not images or sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {list(images)}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> Permutation:
        images = list(range(1, n + 1))
        images[a - 1], images[b - 1] = b, a
        return cls(tuple(images))

    @classmethod
    def from_order(cls, order: Sequence[int]) -> Permutation:
        """The permutation sending ``order[r]`` to ``r + 1`` (a ranking)."""
        images = [0] * len(order)
        for rank, k in enumerate(order, start=1):
            images[k - 1] = rank
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __len__(self):
        return len(self.images)

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for k, v in enumerate(self.images, start=1):
            inv[v - 1] = k
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self.images, start=1))

    def order(self) -> list[int]:
        """Elements listed by increasing image (the array of ``p^-1``)."""
        return list(self.inverse().images)

    def inversions(self) -> int:
        im = self.images
        return sum(1 for a in range(len(im)) for b in range(a + 1, len(im)) if im[a] > im[b])

    def __str__(self):
        return " ".join(map(str, self.images))

    def to_json(self) -> list[int]:
        return list(self.images)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Return ``a * b``, i.e. ``k -> a(b(k))``."""
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} != {b.n}")
    return Permutation(tuple(a.images[v - 1] for v in b.images))


@dataclass(frozen=True)
class PermutationPoint:
    """The configuration ``(pi(k) + phi(k) i)_k`` of ``n`` points."""

    pi: Permutation
    phi: Permutation

    def __post_init__(self):
        if self.pi.n != self.phi.n:
            raise ValueError("pi and phi act on different sizes")

    @property
    def n(self) -> int:
        return self.pi.n

    def coordinates(self) -> list[tuple[int, int]]:
        return list(zip(self.pi.images, self.phi.images))

    def to_json(self) -> dict:
        return {"pi": self.pi.to_json(), "phi": self.phi.to_json()}


def act_on_point(sigma: Permutation, p: PermutationPoint) -> PermutationPoint:
    """Relabel the points of ``p`` by ``sigma``: ``p(pi sigma^-1, phi sigma^-1)``."""
    if sigma.n != p.n:
        raise ValueError(f"size mismatch: {sigma.n} != {p.n}")
    inv = sigma.inverse()
    return PermutationPoint(compose(p.pi, inv), compose(p.phi, inv))


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(int(g) for g in self.letters)
        object.__setattr__(self, "letters", letters)
        if self.n < 1:
            raise ValueError("a braid needs at least one strand")
        for g in letters:
            if g == 0 or abs(g) > self.n - 1:
                raise ValueError(f"letter {g} out of range for B_{self.n}")

    def __add__(self, other: BraidWord) -> BraidWord:
        if self.n != other.n:
            raise ValueError(f"size mismatch: {self.n} != {other.n}")
        return BraidWord(self.n, self.letters + other.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.n, tuple(-g for g in reversed(self.letters)))

    def to_json(self) -> list[int]:
        return list(self.letters)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(f"s{g}" if g > 0 else f"s{-g}^-1" for g in self.letters)


def concat(n: int, words: Iterable[BraidWord]) -> BraidWord:
    letters: list[int] = []
    for w in words:
        if w.n != n:
            raise ValueError(f"size mismatch: {w.n} != {n}")
        letters.extend(w.letters)
    return BraidWord(n, tuple(letters))


def elementary_braid(pi: Permutation, phi: Permutation) -> BraidWord:
    """Braid of the straight-line path ``p(pi, phi) -> p(id, phi)``.

    ``pi`` is peeled from the right by adjacent transpositions (bubble sort).
    Each step uses ``B(r t, phi) = B(r, phi t) B(t, phi)`` for ``t = (a a+1)``
    with ``B(t, phi) = sigma_a`` when ``phi(a) > phi(a+1)`` and ``sigma_a^-1``
    otherwise.
    """
    if pi.n != phi.n:
        raise ValueError(f"size mismatch: {pi.n} != {phi.n}")
    cur = list(pi.images)
    psi = list(phi.images)
    rev: list[int] = []
    n = len(cur)
    changed = True
    while changed:
        changed = False
        for a in range(n - 1):
            if cur[a] > cur[a + 1]:
                rev.append(a + 1 if psi[a] > psi[a + 1] else -(a + 1))
                cur[a], cur[a + 1] = cur[a + 1], cur[a]
                psi[a], psi[a + 1] = psi[a + 1], psi[a]
                changed = True
    return BraidWord(n, tuple(reversed(rev)))


def segment_braid(start: PermutationPoint, end: PermutationPoint) -> BraidWord:
    """Braid of ``p(pi, phi) -> p(pi', phi')`` when both lie in a common cell."""
    inv = end.pi.inverse()
    return elementary_braid(compose(start.pi, inv), compose(start.phi, inv))


def permutation_of_braid(w: BraidWord) -> Permutation:
    images = list(range(1, w.n + 1))
    # right-multiplying by (a a+1) swaps the entries at positions a, a+1
    for g in w.letters:
        a = abs(g)
        images[a - 1], images[a] = images[a], images[a - 1]
    return Permutation(tuple(images))


def free_reduce(w: BraidWord) -> BraidWord:
    stack: list[int] = []
    for g in w.letters:
        if stack and stack[-1] == -g:
            stack.pop()
        else:
            stack.append(g)
    return BraidWord(w.n, tuple(stack))


# --- Garside normal form -------------------------------------------------


@lru_cache(maxsize=None)
def _half_twist(n: int) -> tuple[int, ...]:
    return tuple(range(n, 0, -1))


def _mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(a[v - 1] for v in b)


def _tau(p: tuple[int, ...]) -> tuple[int, ...]:
    # conjugation by the half twist: sigma_i <-> sigma_{n-i}
    n = len(p)
    return tuple(n + 1 - p[n - k] for k in range(1, n + 1))


def _right_descents(p: tuple[int, ...]) -> set[int]:
    return {i for i in range(1, len(p)) if p[i - 1] > p[i]}


def _left_descents(p: tuple[int, ...]) -> set[int]:
    pos = [0] * len(p)
    for k, v in enumerate(p):
        pos[v - 1] = k
    return {i for i in range(1, len(p)) if pos[i - 1] > pos[i]}


def _swap_positions(p: tuple[int, ...], i: int) -> tuple[int, ...]:
    q = list(p)
    q[i - 1], q[i] = q[i], q[i - 1]
    return tuple(q)


def _swap_values(p: tuple[int, ...], i: int) -> tuple[int, ...]:
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in p)


def _left_weight(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    while True:
        move = _left_descents(b) - _right_descents(a)
        if not move:
            return a, b
        i = min(move)
        a = _swap_positions(a, i)   # a * sigma_i
        b = _swap_values(b, i)      # sigma_i^-1 * b


def normal_form(w: BraidWord) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """Left-greedy normal form ``(inf, factors)`` of ``w``.

    ``w = Delta^inf * A_1 ... A_k`` with each ``A_i`` a proper simple element,
    given as the images of its permutation.
    """
    n = w.n
    delta = _half_twist(n)
    ident = tuple(range(1, n + 1))
    # sigma_i^-1 = Delta^-1 (Delta sigma_i^-1); pushing every Delta^-1 to the
    # front conjugates the factors on its left by tau.
    letters = w.letters
    raw: list[tuple[int, ...]] = []
    flip = False
    for g in reversed(letters):
        if g > 0:
            f = _swap_positions(ident, g)
        else:
            f = _mul(delta, _swap_positions(ident, -g))
        raw.append(_tau(f) if flip else f)
        if g < 0:
            flip = not flip
    raw.reverse()
    inf = -sum(1 for g in letters if g < 0)

    factors: list[tuple[int, ...]] = []
    for f in raw:
        factors.append(f)
        k = len(factors) - 1
        while k > 0:
            a, b = _left_weight(factors[k - 1], factors[k])
            if a == factors[k - 1]:
                break
            factors[k - 1], factors[k] = a, b
            k -= 1
    while factors and factors[0] == delta:
        factors.pop(0)
        inf += 1
    while factors and factors[-1] == ident:
        factors.pop()
    return inf, tuple(factors)


def braids_equal(u: BraidWord, v: BraidWord) -> bool:
    if u.n != v.n:
        raise ValueError(f"size mismatch: {u.n} != {v.n}")
    if u.letters == v.letters:
        return True
    return normal_form(u) == normal_form(v)


def is_trivial(w: BraidWord) -> bool:
    return normal_form(w) == (0, ())


def word_from_json(n: int, text) -> BraidWord:
    data = json.loads(text) if isinstance(text, str) else text
    return BraidWord(n, tuple(data))
