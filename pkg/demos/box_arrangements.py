"""How many arrangements can disjoint axis-aligned boxes realise?

Each box family induces a "strictly left of" order and a "strictly below"
order, both interval orders. Counting pairs that compare every pair of
boxes, up to relabelling, gives the numbers below.
"""

import time

from sepbraid import count_box_arrangements

for n in (1, 2, 3, 4):
    start = time.perf_counter()
    count = count_box_arrangements(n)
    print(f"n={n}: {count} arrangements ({time.perf_counter() - start:.2f}s)")
