"""Cutting a path in two and gluing the braids back together.

The braid of a path equals the composition of the braids of its two halves;
the halves are joined through a permutation point shared by the end cell of
the first and the start cell of the second.
"""

import random
from fractions import Fraction

from sepbraid import braid_stream, braids_equal, bridge_to_canonical, compose_results
from sepbraid.fixtures import random_pl_path

rng = random.Random(8)
path = random_pl_path(rng, 4, 6)
cut = Fraction(27, 64)

whole = braid_stream(path)
first, second = braid_stream(path.restrict(0, cut)), braid_stream(path.restrict(cut, 1))
joined = compose_results(first, second)

z0, z1 = path.start_configuration(), path.end_configuration()
print("whole :", bridge_to_canonical(whole, z0, z1))
print("halves:", first.word, "|", second.word)
print("joined:", bridge_to_canonical(joined, z0, z1))
print("equal?", braids_equal(bridge_to_canonical(whole, z0, z1), bridge_to_canonical(joined, z0, z1)))
