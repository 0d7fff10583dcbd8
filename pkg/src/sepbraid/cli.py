"""Command-line front end.

Exit codes: 0 success, 1 unreadable input, 2 contract violation, 3 closure
permutation inconsistent with the computed cover. Errors are also reported
as a JSON object on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .boxes import count_box_arrangements
from .braids import BraidWord, Permutation, braids_equal, permutation_of_braid
from .cover import cover_steps
from .engine import BraidResult, braid_stream, close_loop, compose, loop_permutation
from .exceptions import (
    BraidError,
    ClosureError,
    ContractViolation,
    InputError,
    NonGenericPathError,
)
from .oracle import exact_braid
from .paths import PLPath, load_path

EXIT_PARSE, EXIT_CONTRACT, EXIT_CLOSURE = 1, 2, 3


def emit_svg(result: BraidResult | BraidWord, step: int = 40, gap: int = 30) -> str:
    """Strand diagram: time runs left to right, position ``k`` is row ``k``.

    For ``sigma_a`` the strand coming from position ``a+1`` is drawn over the
    one from position ``a``; for ``sigma_a^-1`` the other way round.
    """
    word = result.word if isinstance(result, BraidResult) else result
    n = word.n
    width = step * (len(word) + 1)
    height = gap * (n + 1)

    def y(row):
        return gap * row

    lines = []
    for c, g in enumerate(word.letters):
        x0, x1 = step * c + step // 2, step * (c + 1) + step // 2
        a = abs(g)
        for row in range(1, n + 1):
            if row not in (a, a + 1):
                lines.append(f'<polyline points="{x0},{y(row)} {x1},{y(row)}"/>')
        over_from, under_from = (a + 1, a) if g > 0 else (a, a + 1)
        over_to, under_to = under_from, over_from
        lines.append(f'<polyline points="{x0},{y(over_from)} {x1},{y(over_to)}"/>')
        xm, ym = (x0 + x1) / 2, (y(under_from) + y(under_to)) / 2
        dx, dy = (x1 - x0) * 0.2, (y(under_to) - y(under_from)) * 0.2
        lines.append(f'<polyline points="{x0},{y(under_from)} {xm - dx:g},{ym - dy:g}"/>')
        lines.append(f'<polyline points="{xm + dx:g},{ym + dy:g} {x1},{y(under_to)}"/>')
    edge = step * len(word) + step // 2
    for row in range(1, n + 1):
        lines.append(f'<polyline points="0,{y(row)} {step // 2},{y(row)}"/>')
        lines.append(f'<polyline points="{edge},{y(row)} {width},{y(row)}"/>')
    body = "\n  ".join(lines)
    return (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
            f'fill="none" stroke="black" stroke-width="2">\n  {body}\n</svg>\n')


def _read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from exc


def _parse_permutation(text: str, n: int | None = None) -> Permutation:
    try:
        images = json.loads(text)
        perm = Permutation(tuple(images))
    except (json.JSONDecodeError, TypeError, ValueError) as exc:
        raise InputError(f"invalid permutation {text!r}") from exc
    if n is not None and perm.n != n:
        raise InputError(f"closure permutation has size {perm.n}, expected {n}")
    return perm


def _format_word(word: BraidWord, fmt: str, payload: dict) -> str:
    if fmt == "json":
        return json.dumps(payload)
    if fmt == "svg":
        return emit_svg(word)
    return str(word)


def _compute_one(args_tuple):
    path_file, closure, fmt, debug, init, allow_decimal = args_tuple
    path = load_path(_read_json(path_file), allow_decimal=allow_decimal)
    result = braid_stream(path, init=init, debug=debug)
    closed = None
    if closure is not None:
        sigma = _parse_permutation(closure, path.n)
        closed = close_loop(result, sigma)
        if permutation_of_braid(closed) != loop_permutation(result, sigma):
            raise ClosureError("closed braid does not realise the closure permutation")
    shown = closed if closed is not None else result.word
    return _format_word(shown, fmt, result.to_json(closed))


def cmd_compute(args) -> int:
    jobs = [(f, args.closure, args.format, args.debug_verify, args.init, args.allow_decimal)
            for f in args.input]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            outputs = list(pool.map(_compute_one, jobs))
    else:
        outputs = [_compute_one(j) for j in jobs]
    for out in outputs:
        sys.stdout.write(out if out.endswith("\n") else out + "\n")
    return 0


def cmd_oracle(args) -> int:
    for f in args.input:
        path = load_path(_read_json(f), allow_decimal=args.allow_decimal)
        if not isinstance(path, PLPath):
            raise InputError("the oracle only accepts pl_path inputs")
        word = exact_braid(path)
        print(_format_word(word, args.format, word.to_json()).rstrip("\n"))
    return 0


def cmd_cover(args) -> int:
    path = load_path(_read_json(args.input), allow_decimal=args.allow_decimal)
    steps = cover_steps(path, init=args.init, debug=args.debug_verify)
    doc = []
    for s in steps:
        item = s.arrangement.to_json()
        item["interval"] = [str(s.start), str(s.end)]
        doc.append(item)
    print(json.dumps(doc))
    return 0


def _load_result(path) -> BraidResult:
    try:
        return BraidResult.from_json(_read_json(path))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"invalid result document {path}: {exc}") from exc


def cmd_compose(args) -> int:
    if len(args.result) != 2:
        raise InputError("compose needs exactly two --result files")
    f, g = (_load_result(p) for p in args.result)
    out = compose(f, g, mode=args.mode)
    print(_format_word(out.word, args.format, out.to_json()).rstrip("\n"))
    return 0


def cmd_close(args) -> int:
    r = _load_result(args.result)
    sigma = _parse_permutation(args.closure, r.n)
    closed = close_loop(r, sigma)
    print(_format_word(closed, args.format, r.to_json(closed)).rstrip("\n"))
    return 0


def cmd_enumerate_boxes(args) -> int:
    if args.n < 1:
        raise InputError("n must be at least 1")
    print(count_box_arrangements(args.n))
    return 0


def selftest_checks():
    """Small embedded fixtures: yields ``(name, passed)``."""
    from .braids import segment_braid
    from .cover import cover
    from .engine import braid_of_cover, bridge_to_canonical
    from .fixtures import (CIRCLE_CLOSURE, CIRCLE_END_POINT, CIRCLE_START_POINT,
                           bundled_circle_tube, circle_table)

    yield "box counts n=2,3", (count_box_arrangements(2), count_box_arrangements(3)) == (4, 40)
    tube = bundled_circle_tube()
    closed = close_loop(braid_stream(tube), CIRCLE_CLOSURE)
    yield "circle loop braid", braids_equal(closed, BraidWord(4, (2, 1, 3)))
    arrs = cover(circle_table())
    yield "circle cover length", len(arrs) == 5
    r = braid_of_cover(arrs)
    bridged = (segment_braid(CIRCLE_START_POINT, r.start_point) + r.word
               + segment_braid(r.end_point, CIRCLE_END_POINT))
    yield "circle open-path braid", braids_equal(bridged, BraidWord(4, (2, 1)))
    cross = PLPath([0, 1], [[(0, 0), (1, 0)], [(1, 1), (0, 1)]])
    yield "oracle crossing", exact_braid(cross).letters == (1,)
    res = braid_stream(cross)
    word = bridge_to_canonical(res, cross.start_configuration(), cross.end_configuration())
    yield "stream vs oracle", braids_equal(word, exact_braid(cross))


def cmd_selftest(args) -> int:
    ok = True
    for name, passed in selftest_checks():
        print(f"{'PASS' if passed else 'FAIL'} {name}")
        ok &= bool(passed)
    return 0 if ok else EXIT_CONTRACT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sepbraid", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, multi=True):
        if multi:
            p.add_argument("--input", action="append", required=True, help="path/tube JSON file")
        else:
            p.add_argument("--input", required=True, help="path/tube JSON file")
        p.add_argument("--allow-decimal", action="store_true",
                       help="accept decimal numbers, converted exactly from binary floats")

    p = sub.add_parser("compute", help="braid of a path or tube family")
    common(p)
    p.add_argument("--closure", help='closure permutation as a JSON array, e.g. "[2,3,4,1]"')
    p.add_argument("--format", choices=("json", "text", "svg"), default="json")
    p.add_argument("--debug-verify", action="store_true")
    p.add_argument("--init", choices=("pairs", "sorted"), default="pairs")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("oracle", help="exact braid of a generic pl_path")
    common(p)
    p.add_argument("--format", choices=("json", "text", "svg"), default="json")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("cover", help="dump the covering arrangement sequence")
    common(p, multi=False)
    p.add_argument("--init", choices=("pairs", "sorted"), default="pairs")
    p.add_argument("--debug-verify", action="store_true")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("compose", help="compose two stored results")
    p.add_argument("--result", action="append", required=True)
    p.add_argument("--mode", choices=("bridge", "direct"), default="bridge")
    p.add_argument("--format", choices=("json", "text", "svg"), default="json")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("close", help="close a stored result into a loop braid")
    p.add_argument("--result", required=True)
    p.add_argument("--closure", required=True)
    p.add_argument("--format", choices=("json", "text", "svg"), default="json")
    p.set_defaults(func=cmd_close)

    p = sub.add_parser("enumerate-boxes", help="count box-realisable arrangements")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_enumerate_boxes)

    p = sub.add_parser("selftest", help="run the embedded fixtures")
    p.set_defaults(func=cmd_selftest)
    return parser


def _fail(exc: Exception, code: int) -> int:
    doc = {"error": type(exc).__name__, "message": str(exc), "exit_code": code}
    for attr in ("pair", "time", "index"):
        value = getattr(exc, attr, None)
        if value is not None:
            doc[attr] = str(value) if isinstance(value, Fraction) else value
    sys.stderr.write(json.dumps(doc) + "\n")
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        return _fail(exc, EXIT_PARSE)
    except ClosureError as exc:
        return _fail(exc, EXIT_CLOSURE)
    except (ContractViolation, NonGenericPathError) as exc:
        return _fail(exc, EXIT_CONTRACT)
    except BraidError as exc:
        return _fail(exc, EXIT_CONTRACT)


if __name__ == "__main__":
    sys.exit(main())
