"""Random rational paths: the streaming algorithm against exact crossing tracking.

The streaming algorithm sees each path only through its separation
predicate, while the oracle reads exact coordinates. After moving both ends
to canonical permutation points, the two words are compared in the braid
group.
"""

import random
import time

from sepbraid import braid_stream, braids_equal, bridge_to_canonical, exact_braid
from sepbraid.fixtures import random_generic_path

rng = random.Random(2024)
start = time.perf_counter()
agree = 0
for trial in range(50):
    path = random_generic_path(rng, rng.randint(2, 6), rng.randint(2, 10))
    result = braid_stream(path)
    word = bridge_to_canonical(result, path.start_configuration(), path.end_configuration())
    exact = exact_braid(path)
    agree += braids_equal(word, exact)
    if trial < 5:
        print(f"n={path.n}: stream {word}  |  oracle {exact}")
print(f"{agree}/50 agree ({time.perf_counter() - start:.1f}s)")
