"""From separation intervals to an arrangement sequence, then to a braid.

The separation answers are given as a table of intervals per pair. The
covering loop turns them into a short sequence of arrangements; walking
through permutation points of consecutive intersections gives a braid word.
"""

from sepbraid import BraidWord, braid_of_cover, braids_equal, cover_steps
from sepbraid.braids import segment_braid
from sepbraid.fixtures import CIRCLE_END_POINT, CIRCLE_START_POINT, circle_table

steps = cover_steps(circle_table())
for step in steps:
    print(f"[{step.start}, {step.end}]  {step.arrangement}")

result = braid_of_cover([s.arrangement for s in steps])
print("word between the computed permutation points:", result.word)

# re-express the word between two fixed points of the first and last cells
bridged = (segment_braid(CIRCLE_START_POINT, result.start_point) + result.word
           + segment_braid(result.end_point, CIRCLE_END_POINT))
print("bridged word:", bridged, "| equal to s2 s1?", braids_equal(bridged, BraidWord(4, (2, 1))))
