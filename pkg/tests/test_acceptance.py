"""Acceptance criteria, one check per criterion.

Each check returns ``(passed, detail)``. Under pytest every check prints a
``PASS``/``FAIL`` line and asserts; ``python tests/test_acceptance.py`` prints
the same lines without pytest.
"""

import random
import sys
import time
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from sepbraid import (  # noqa: E402
    Axis,
    BraidWord,
    PLTube,
    PointedArrangement,
    braid_of_cover,
    braid_stream,
    braids_equal,
    bridge_to_canonical,
    close_loop,
    compose_results,
    count_box_arrangements,
    cover,
    exact_braid,
)
from sepbraid.boxes import box_arrangements  # noqa: E402
from sepbraid.braids import segment_braid  # noqa: E402
from sepbraid.exceptions import NonGenericPathError  # noqa: E402
from sepbraid.fixtures import (  # noqa: E402
    CIRCLE_CLOSURE,
    CIRCLE_END_POINT,
    CIRCLE_START_POINT,
    bundled_circle_tube,
    circle_table,
    random_generic_path,
    random_pl_path,
    random_pl_tube,
)

from helpers import random_dag, random_point  # noqa: E402
from test_boxes import grid_box_classes  # noqa: E402
from test_paths import check_sep_answer  # noqa: E402

F = Fraction


def criterion_1():
    start = time.perf_counter()
    counts = [count_box_arrangements(n) for n in (2, 3, 4)]
    elapsed = time.perf_counter() - start
    grid_ok = all(box_arrangements(n) == grid_box_classes(n) for n in (1, 2, 3))
    ok = counts == [4, 40, 772] and elapsed < 60 and grid_ok
    return ok, f"counts {counts} in {elapsed:.1f}s, grid oracle agrees for n<=3: {grid_ok}"


def criterion_2():
    start = time.perf_counter()
    tube = bundled_circle_tube()
    closed = close_loop(braid_stream(tube), CIRCLE_CLOSURE)
    elapsed = time.perf_counter() - start
    ok = braids_equal(closed, BraidWord(4, (2, 1, 3))) and elapsed < 1
    return ok, f"closed word {closed} in {elapsed:.2f}s"


def criterion_3():
    arrs = cover(circle_table())
    r = braid_of_cover(arrs)
    bridged = (segment_braid(CIRCLE_START_POINT, r.start_point) + r.word
               + segment_braid(r.end_point, CIRCLE_END_POINT))
    ok = len(arrs) == 5 and braids_equal(bridged, BraidWord(4, (2, 1)))
    return ok, f"{len(arrs)} arrangements, bridged word {bridged}"


def criterion_4(count=200, seed=20241015):
    rng = random.Random(seed)
    start = time.perf_counter()
    failures = 0
    for _ in range(count):
        path = random_generic_path(rng, rng.randint(2, 6), rng.randint(2, 10), max_den=64)
        r = braid_stream(path)
        word = bridge_to_canonical(r, path.start_configuration(), path.end_configuration())
        failures += not braids_equal(word, exact_braid(path))
    elapsed = time.perf_counter() - start
    ok = failures == 0 and elapsed < 300
    return ok, f"{count - failures}/{count} paths agree with the oracle in {elapsed:.1f}s"


def criterion_5(queries=10_000, seed=7):
    rng = random.Random(seed)
    violations = 0
    done = 0
    while done < queries:
        n = rng.randint(2, 5)
        pieces = rng.randint(1, 6)
        backend = (random_pl_path(rng, n, pieces) if done % 2 == 0
                   else random_pl_tube(rng, n, pieces))
        for _ in range(25):
            i, j = rng.sample(range(1, n + 1), 2)
            t = rng.choice(list(backend.times[:-1]) + [F(rng.randint(0, 127), 128)])
            res = backend.sep(i, j, t)
            bad = ({res.i_low, res.j_high} != {i, j} or not t < res.until <= 1
                   or check_sep_answer(backend, res, t, samples=64) is not None)
            violations += bad
            done += 1
    return violations == 0, f"{done} queries over both backends, {violations} violations"


def criterion_6(insertions=1000, seed=3):
    rng = random.Random(seed)
    violations = 0
    done = 0
    while done < insertions:
        n = rng.randint(2, 8)
        point = random_point(rng, n)
        dag = random_dag(rng, n, 0.15, point)
        state = PointedArrangement.from_edges(n, {e: F(1) for e in dag.edges}, point)
        for _ in range(10):
            i, j = rng.sample(range(1, n + 1), 2)
            axis = rng.choice((Axis.RE, Axis.IM))
            if state.has_edge(i, j, axis) or state.reaches(j, i, axis):
                continue
            before = state.point
            word = state.insert(i, j, axis, F(1))
            ok = state.is_consistent() and braids_equal(word, segment_braid(before, state.point))
            violations += not ok
            done += 1
    return violations == 0, f"{done} insertions, {violations} violations"


def _rewrite(rng, letters, n):
    """One random relator move on a word (as a list of letters)."""
    k = rng.randint(0, len(letters))
    move = rng.randrange(4)
    if move == 0:  # free insertion
        g = rng.choice([a for a in range(1, n)] + [-a for a in range(1, n)])
        return letters[:k] + [g, -g] + letters[k:]
    if move == 1 and n >= 3:  # braid relator inserted as a trivial word
        a = rng.randint(1, n - 2)
        rel = [a, a + 1, a, -(a + 1), -a, -(a + 1)]
        if rng.random() < 0.5:
            rel = [-g for g in reversed(rel)]
        return letters[:k] + rel + letters[k:]
    if move == 2 and n >= 4:  # commutation relator
        a = rng.randint(1, n - 1)
        far = [b for b in range(1, n) if abs(a - b) > 1]
        if far:
            b = rng.choice(far)
            return letters[:k] + [a, b, -a, -b] + letters[k:]
    # in-place rewrite of an existing pattern
    for pos in range(len(letters) - 2):
        a, b, c = letters[pos:pos + 3]
        if a == c and a > 0 and b > 0 and abs(a - b) == 1:
            return letters[:pos] + [b, a, b] + letters[pos + 3:]
    for pos in range(len(letters) - 1):
        a, b = letters[pos:pos + 2]
        if abs(abs(a) - abs(b)) > 1:
            return letters[:pos] + [b, a] + letters[pos + 2:]
    return letters


def criterion_7(words=1000, seed=5):
    rng = random.Random(seed)
    wrong = 0
    for _ in range(words):
        n = rng.randint(2, 6)
        letters = [rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(rng.randint(0, 12))]
        moved = list(letters)
        for _ in range(rng.randint(1, 6)):
            moved = _rewrite(rng, moved, n)
        wrong += not braids_equal(BraidWord(n, tuple(letters)), BraidWord(n, tuple(moved)))
    distinct = [not braids_equal(BraidWord(n, (1,)), BraidWord(n, (-1,))) for n in range(2, 7)]
    distinct += [not braids_equal(BraidWord(n, (1,)), BraidWord(n, ())) for n in range(2, 7)]
    ok = wrong == 0 and all(distinct)
    return ok, f"{words - wrong}/{words} rewritten words equal, sigma1 distinguished: {all(distinct)}"


def criterion_8(count=50, seed=11):
    rng = random.Random(seed)
    failures = 0
    for _ in range(count):
        path = random_pl_path(rng, rng.randint(2, 6), rng.randint(2, 10))
        s = F(rng.randint(1, 63), 64)
        whole = braid_stream(path)
        joined = compose_results(braid_stream(path.restrict(0, s)),
                                 braid_stream(path.restrict(s, 1)))
        z0, z1 = path.start_configuration(), path.end_configuration()
        failures += not braids_equal(bridge_to_canonical(joined, z0, z1),
                                     bridge_to_canonical(whole, z0, z1))
    return failures == 0, f"{count - failures}/{count} split paths compose to the whole braid"


CRITERIA = [
    (1, "box-arrangement counts", criterion_1),
    (2, "closed braid of the quarter-turn loop", criterion_2),
    (3, "open braid of the five-arrangement cover", criterion_3),
    (4, "streaming braid equals exact oracle", criterion_4),
    (5, "separation predicate contract", criterion_5),
    (6, "edge insertion keeps the point and emits the segment braid", criterion_6),
    (7, "braid equality under relator moves", criterion_7),
    (8, "split and compose coherence", criterion_8),
]


def report(number, title, check):
    start = time.perf_counter()
    ok, detail = check()
    line = (f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} "
            f"({detail}; {time.perf_counter() - start:.1f}s)")
    return ok, line


def _make_test(number, title, check):
    def test(capsys):
        ok, line = report(number, title, check)
        with capsys.disabled():
            print("\n" + line)
        assert ok, line

    test.__name__ = f"test_criterion_{number}"
    return test


for _number, _title, _check in CRITERIA:
    globals()[f"test_criterion_{_number}"] = _make_test(_number, _title, _check)


if __name__ == "__main__":
    results = [report(*entry) for entry in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
