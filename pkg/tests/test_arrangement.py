import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sepbraid import (
    Arrangement,
    Axis,
    Permutation,
    PermutationPoint,
    act_on_point,
    arrangement_of_configuration,
    config_in_cell,
    embed,
    incomparable_pairs,
    intersect,
    is_arrangement,
    permutation_point_in,
    point_in_cell,
    relabel,
)
from sepbraid.braids import compose
from sepbraid.cover import cover
from sepbraid.engine import braid_stream
from sepbraid.fixtures import CIRCLE_CLOSURE, CIRCLE_START_POINT, circle_table

from helpers import random_dag

RE, IM = Axis.RE, Axis.IM


def arr(n, *edges):
    return Arrangement(n, frozenset(edges))


def grid_configurations(n):
    """All configurations with coordinates in {0..n-1}: enough to realise any pair of orders."""
    coords = list(itertools.product(range(n), repeat=n))
    for xs in coords:
        for ys in coords:
            yield [(Fraction(x), Fraction(y)) for x, y in zip(xs, ys)]


@pytest.mark.parametrize("g, expected", [
    (arr(2, (1, 2, RE)), True),
    (arr(2), False),
    (arr(2, (1, 2, RE), (2, 1, RE)), False),
    (arr(2, (1, 2, IM)), True),
    (arr(3, (1, 2, RE), (2, 3, RE)), True),
])
def test_is_arrangement_examples(g, expected):
    assert is_arrangement(g) is expected


def test_incomparable_pairs_examples():
    assert incomparable_pairs(arr(3, (1, 2, RE), (2, 3, RE))) == []
    assert incomparable_pairs(arr(3, (1, 2, RE))) == [(1, 3), (2, 3)]
    assert incomparable_pairs(arr(2, (1, 2, IM))) == []


def test_intersect_examples():
    assert intersect(arr(2, (1, 2, RE)), arr(2, (2, 1, RE))) is None
    both = intersect(arr(2, (1, 2, RE)), arr(2, (1, 2, IM)))
    assert both.edges == {(1, 2, RE), (1, 2, IM)}


def test_intersect_closing_cell_of_worked_loop():
    r = braid_stream(circle_table(), start_point=CIRCLE_START_POINT)
    target = relabel(CIRCLE_CLOSURE.inverse(), r.start_arrangement)
    meet = intersect(r.end_arrangement, target)
    assert meet is not None
    assert point_in_cell(target, act_on_point(CIRCLE_CLOSURE.inverse(), r.start_point))


@pytest.mark.parametrize("n", [2, 3])
def test_intersect_agrees_with_grid_search(n):
    rng = random.Random(n)
    configs = list(grid_configurations(n))
    for _ in range(60):
        a, b = random_dag(rng, n, 0.5), random_dag(rng, n, 0.5)
        witness = any(config_in_cell(a, z) and config_in_cell(b, z) for z in configs)
        assert (intersect(a, b) is not None) == witness


def test_relabel_examples():
    a = arr(3, (1, 2, RE), (3, 1, IM))
    assert relabel(Permutation.identity(3), a) == a
    sigma = Permutation((2, 3, 1))
    assert relabel(sigma, relabel(sigma.inverse(), a)) == a
    assert relabel(Permutation((2, 1)), arr(2, (1, 2, RE))) == arr(2, (2, 1, RE))


def test_relabel_matches_relabelled_configuration():
    z = [(Fraction(0), Fraction(1)), (Fraction(3), Fraction(0)), (Fraction(1), Fraction(2))]
    sigma = Permutation((3, 1, 2))
    moved = [z[sigma.inverse()(k) - 1] for k in range(1, 4)]
    assert relabel(sigma, arrangement_of_configuration(z)) == arrangement_of_configuration(moved)


def test_permutation_point_in_examples():
    p = permutation_point_in(arr(2, (1, 2, RE)))
    assert p.pi(1) < p.pi(2)
    assert permutation_point_in(arr(2, (1, 2, RE))).phi == Permutation.identity(2)
    assert not point_in_cell(arr(2, (1, 2, RE)), PermutationPoint(Permutation((2, 1)),
                                                                   Permutation((1, 2))))


def test_worked_example_start_point_lies_in_first_cell():
    first = cover(circle_table())[0]
    assert point_in_cell(first, CIRCLE_START_POINT)


def test_config_in_cell_examples():
    n = 4
    chain = arr(n, *[(k, k + 1, RE) for k in range(1, n)])
    line = [(Fraction(k), Fraction(0)) for k in range(1, n + 1)]
    assert config_in_cell(chain, line)
    assert not config_in_cell(arr(2, (1, 2, RE)), [(Fraction(0), Fraction(0)),
                                                    (Fraction(0), Fraction(1))])


def test_arrangement_of_configuration_examples():
    line = [(Fraction(k), Fraction(0)) for k in range(1, 4)]
    g = arrangement_of_configuration(line)
    assert all(q is RE for _, _, q in g.edges) and is_arrangement(g)
    assert arrangement_of_configuration([(0, 0), (0, 1)]) == arr(2, (1, 2, IM))
    assert arrangement_of_configuration([(1, 1), (2, 0)]) == arr(2, (1, 2, RE), (2, 1, IM))
    with pytest.raises(ValueError):
        arrangement_of_configuration([(0, 0), (0, 0)])


coords = st.fractions(min_value=-4, max_value=4, max_denominator=8)


@given(st.lists(st.tuples(coords, coords), min_size=1, max_size=6, unique=True))
def test_configuration_lies_in_its_arrangement(z):
    g = arrangement_of_configuration(z)
    assert is_arrangement(g)
    assert config_in_cell(g, z)


@given(st.integers(1, 6), st.randoms(use_true_random=False))
def test_point_in_cell_iff_embedded_configuration_in_cell(n, rng):
    g = random_dag(rng, n)
    pi = list(range(1, n + 1)); rng.shuffle(pi)
    phi = list(range(1, n + 1)); rng.shuffle(phi)
    p = PermutationPoint(Permutation(tuple(pi)), Permutation(tuple(phi)))
    assert point_in_cell(g, p) == config_in_cell(g, embed(p))
    assert point_in_cell(g, permutation_point_in(g))


@given(st.integers(1, 6), st.randoms(use_true_random=False))
def test_relabel_is_an_action_on_cells(n, rng):
    g = random_dag(rng, n)
    perm = list(range(1, n + 1)); rng.shuffle(perm)
    sigma = Permutation(tuple(perm))
    p = permutation_point_in(g)
    assert point_in_cell(relabel(sigma, g), act_on_point(sigma, p))
    tau = Permutation(tuple(rng.sample(range(1, n + 1), n)))
    assert relabel(compose(sigma, tau), g) == relabel(sigma, relabel(tau, g))


def test_json_round_trip():
    g = arr(3, (1, 2, RE), (3, 2, IM))
    assert Arrangement.from_json(g.to_json()) == g
