"""Four points turning a quarter circle, enclosed in thin tubes.

The motion ends on a relabelling of its start configuration, so it closes
into a loop. We compute its braid using only the tubes' separation answers,
close it with the relabelling, and draw the result.
"""

from sepbraid import BraidWord, braid_stream, braids_equal, close_loop
from sepbraid.cli import emit_svg
from sepbraid.fixtures import CIRCLE_CLOSURE, bundled_circle_tube

tube = bundled_circle_tube()
print(f"tube family: {tube.n} strands, {len(tube.times) - 1} pieces, radius 1/8")

result = braid_stream(tube, debug=True)
print("open-path word between the chosen permutation points:", result.word)

closed = close_loop(result, CIRCLE_CLOSURE)
print("closed loop braid:", closed)
print("equal to s2 s1 s3?", braids_equal(closed, BraidWord(4, (2, 1, 3))))

with open("quarter_turn.svg", "w") as fh:
    fh.write(emit_svg(closed))
print("strand diagram written to quarter_turn.svg")
