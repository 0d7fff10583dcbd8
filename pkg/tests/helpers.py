"""Random generators shared by several test modules."""

import itertools
import random

from sepbraid import Arrangement, Axis, Permutation, PermutationPoint


def random_permutation(rng: random.Random, n: int) -> Permutation:
    return Permutation(tuple(rng.sample(range(1, n + 1), n)))


def random_point(rng: random.Random, n: int) -> PermutationPoint:
    return PermutationPoint(random_permutation(rng, n), random_permutation(rng, n))


def random_dag(rng: random.Random, n: int, density: float = 0.4,
               point: PermutationPoint | None = None) -> Arrangement:
    """Random labelled graph whose subgraphs are sorted by ``point`` (random if omitted)."""
    point = point or random_point(rng, n)
    edges = set()
    for q, rank in ((Axis.RE, point.pi), (Axis.IM, point.phi)):
        for i, j in itertools.permutations(range(1, n + 1), 2):
            if rank(i) < rank(j) and rng.random() < density:
                edges.add((i, j, q))
    return Arrangement(n, frozenset(edges))
