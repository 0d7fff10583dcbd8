"""Counting arrangements induced by disjoint axis-aligned boxes.

A family of pairwise disjoint boxes induces the arrangement "box i strictly
left of box j" / "box i strictly below box j". Its two orders are interval
orders, and conversely any pair of interval orders on ``{1..n}`` in which every
pair is comparable in one of them is realised by boxes (take products of
independent interval representations). Classes are counted up to relabelling.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

Relation = frozenset  # of 0-based pairs (a, b) meaning a < b


def _is_strict_order(n: int, rel: set[tuple[int, int]]) -> bool:
    for a, b in rel:
        if (b, a) in rel:
            return False
        for c in range(n):
            if (b, c) in rel and (a, c) not in rel:
                return False
    return True


def _is_interval_order(rel: set[tuple[int, int]]) -> bool:
    # 2+2-free: a<b, c<d with a||d and c||b is forbidden
    for (a, b), (c, d) in itertools.combinations(rel, 2):
        if len({a, b, c, d}) < 4:
            continue
        if ((a, d) not in rel and (d, a) not in rel
                and (c, b) not in rel and (b, c) not in rel):
            return False
    return True


@lru_cache(maxsize=None)
def interval_orders(n: int) -> tuple[Relation, ...]:
    """All labelled interval orders on ``n`` elements."""
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    found = []
    # each unordered pair is below, above, or incomparable
    for choice in itertools.product((0, 1, 2), repeat=len(pairs)):
        rel = set()
        for (a, b), c in zip(pairs, choice):
            if c == 1:
                rel.add((a, b))
            elif c == 2:
                rel.add((b, a))
        if _is_strict_order(n, rel) and _is_interval_order(rel):
            found.append(frozenset(rel))
    return tuple(found)


def canonical_form(n: int, re: Relation, im: Relation) -> tuple:
    """Smallest relabelled encoding of the pair of relations."""
    best = None
    for s in itertools.permutations(range(n)):
        key = (tuple(sorted((s[a], s[b]) for a, b in re)),
               tuple(sorted((s[a], s[b]) for a, b in im)))
        if best is None or key < best:
            best = key
    return best


def box_arrangements(n: int) -> set[tuple]:
    """Canonical forms of all box-realisable arrangements on ``n`` points."""
    if n < 1:
        raise ValueError("n must be at least 1")
    orders = interval_orders(n)
    all_pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]

    def covered(rel):
        return frozenset((a, b) for a, b in all_pairs if (a, b) in rel or (b, a) in rel)

    cover = {r: covered(r) for r in orders}
    full = frozenset(all_pairs)
    classes = set()
    for re in orders:
        for im in orders:
            if cover[re] | cover[im] == full:
                classes.add(canonical_form(n, re, im))
    return classes


def count_box_arrangements(n: int) -> int:
    return len(box_arrangements(n))
