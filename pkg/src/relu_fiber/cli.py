"""Command-line front end: JSON in, JSON (or SVG) out, stable exit codes.

Exit codes: 0 success or affirmative decision, 1 usage error, 2 input error,
3 negative decision (not equivalent / not in orbit / not isomorphic / not
certified / unequal), 4 unknown verdict, 5 width-cap refusal.

Every command is a thin adapter over the library; output is byte-identical
for identical inputs and flags.  Two-parameter commands accept ``-`` in the
second slot to read that parameter from standard input, and any parameter
argument starting with ``{`` is treated as inline JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .canon import minimal_form, minimal_form_to_json, zero_factor_rank, zero_factor_reduce, ZeroReduction
from .equivalence import certificate_to_json, equivalent, flip, flip_subsets
from .errors import InputError, WidthCapError
from .fibre import (
    Certified,
    ISOMORPHIC,
    NOT_ISOMORPHIC,
    genericity_certificate,
    genericity_to_json,
    verdict,
    verdict_to_json,
)
from .group import group_element_to_json, same_orbit, stabilizer, stabilizer_to_json
from .param import Parameter, parameter_to_json, parse_parameter
from .plot import arrangement_svg
from .rational import format_rational, parse_rational
from .realize import equal_on_samples, evaluate, exact_equal_1d

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_NEGATIVE = 3
EXIT_UNKNOWN = 4
EXIT_WIDTH_CAP = 5


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2; we reserve that
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="relu-fiber", description="Exact symmetry analysis of shallow ReLU network parameters.")
    parser.add_argument("--format", choices=("json", "compact"), default="json", help="JSON output style")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    def one(name, help_, two=False):
        cmd = sub.add_parser(name, help=help_)
        cmd.add_argument("param", help="parameter file, inline JSON, or - for stdin")
        if two:
            cmd.add_argument("param2", help="second parameter (file, inline JSON, or -)")
        return cmd

    cmd = one("minform", "canonical minimal form of a single-output parameter")
    cmd = one("reduce", "minimal form with zero rows deleted")
    cmd = one("rank", "number of zero rows in the minimal form")
    cmd = one("equiv", "decide functional equality, with certificates", two=True)
    cmd = one("stab", "stabilizer generators under permutation-and-scaling")
    cmd = one("orbit", "group element carrying the first parameter to the second", two=True)
    cmd = one("generic", "genericity certificate")
    cmd.add_argument("--width-cap", type=int, default=None, help="refuse sweeps above this width")
    cmd = one("verdict", "is the fibre exactly one freely-acted orbit?")
    cmd.add_argument("--width-cap", type=int, default=None, help="refuse sweeps above this width")
    cmd = one("flip", "negate a subset of rows with cancelling weighted sum")
    cmd.add_argument("subset", help="comma-separated 1-based neuron indices, e.g. 1,2,3")
    cmd = one("flipsets", "all flippable subsets")
    cmd.add_argument("--width-cap", type=int, default=None, help="refuse sweeps above this width")
    cmd = one("eval", "evaluate the realized function at a point")
    cmd.add_argument("point", help="comma-separated rational coordinates, e.g. 0,0")
    cmd = one("oracle1d", "complete equality decision for m=1, k=1", two=True)
    cmd = one("sample-equal", "exact comparison on seeded integer samples", two=True)
    cmd.add_argument("--seed", type=_u64, required=True, help="sample seed (required; no ambient entropy)")
    cmd.add_argument("--count", type=int, default=100, help="number of sample points")
    cmd = one("plot", "SVG of the line arrangement and zero set (m=2, k=1)")
    cmd.add_argument("--bbox", default="-6,-6,6,6", help="window as x0,y0,x1,y1")
    cmd.add_argument("--grid", type=int, default=200, help="marching-squares resolution")
    return parser


def _u64(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return value


def _load_parameter(source: str, stdin_ok: bool = True) -> Parameter:
    if source == "-":
        if not stdin_ok:
            raise InputError("only the second parameter slot may read stdin")
        return parse_parameter(sys.stdin.read())
    if source.lstrip().startswith("{"):
        return parse_parameter(source)
    try:
        with open(source, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc}") from exc
    return parse_parameter(text)


def _parse_indices(text: str, n: int) -> List[int]:
    try:
        indices = [int(chunk) for chunk in text.split(",") if chunk != ""]
    except ValueError as exc:
        raise InputError(f"bad index list {text!r}") from exc
    if not indices:
        raise InputError("empty index list")
    for i in indices:
        if not 1 <= i <= n:
            raise InputError(f"index {i} out of range 1..{n}")
    return [i - 1 for i in indices]


def _parse_point(text: str):
    return tuple(parse_rational(chunk) for chunk in text.split(","))


def _emit(obj, compact: bool) -> None:
    if compact:
        sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")
    else:
        sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    compact = args.format == "compact"
    try:
        return _dispatch(args, compact)
    except WidthCapError as exc:
        print(f"relu-fiber: width cap: {exc}", file=sys.stderr)
        return EXIT_WIDTH_CAP
    except InputError as exc:
        print(f"relu-fiber: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_INPUT


def _dispatch(args, compact: bool) -> int:
    command = args.command

    if command == "minform":
        p = _load_parameter(args.param)
        _emit(minimal_form_to_json(minimal_form(p)), compact)
        return EXIT_OK

    if command == "reduce":
        p = _load_parameter(args.param)
        reduced = zero_factor_reduce(p)
        if isinstance(reduced, ZeroReduction):
            _emit({"kind": "zero", "C": format_rational(reduced.constant)}, compact)
        else:
            _emit({"kind": "parameter", "parameter": parameter_to_json(reduced)}, compact)
        return EXIT_OK

    if command == "rank":
        p = _load_parameter(args.param)
        _emit({"rank": zero_factor_rank(p)}, compact)
        return EXIT_OK

    if command == "equiv":
        p1 = _load_parameter(args.param, stdin_ok=False)
        p2 = _load_parameter(args.param2)
        ok, certs = equivalent(p1, p2)
        _emit({"equivalent": ok, "certificates": [certificate_to_json(c) for c in certs]}, compact)
        return EXIT_OK if ok else EXIT_NEGATIVE

    if command == "stab":
        p = _load_parameter(args.param)
        _emit(stabilizer_to_json(stabilizer(p)), compact)
        return EXIT_OK

    if command == "orbit":
        p1 = _load_parameter(args.param, stdin_ok=False)
        p2 = _load_parameter(args.param2)
        g = same_orbit(p1, p2)
        if g is None:
            _emit({"in_orbit": False}, compact)
            return EXIT_NEGATIVE
        _emit({"in_orbit": True, "element": group_element_to_json(g)}, compact)
        return EXIT_OK

    if command == "generic":
        p = _load_parameter(args.param)
        kwargs = {} if args.width_cap is None else {"width_cap": args.width_cap}
        result = genericity_certificate(p, **kwargs)
        _emit(genericity_to_json(result), compact)
        return EXIT_OK if isinstance(result, Certified) else EXIT_NEGATIVE

    if command == "verdict":
        p = _load_parameter(args.param)
        kwargs = {} if args.width_cap is None else {"width_cap": args.width_cap, "flip_cap": args.width_cap}
        v = verdict(p, **kwargs)
        _emit(verdict_to_json(v), compact)
        if v.state == ISOMORPHIC:
            return EXIT_OK
        return EXIT_NEGATIVE if v.state == NOT_ISOMORPHIC else EXIT_UNKNOWN

    if command == "flip":
        p = _load_parameter(args.param)
        subset = _parse_indices(args.subset, p.n)
        _emit(parameter_to_json(flip(p, subset)), compact)
        return EXIT_OK

    if command == "flipsets":
        p = _load_parameter(args.param)
        kwargs = {} if args.width_cap is None else {"width_cap": args.width_cap}
        subsets = flip_subsets(p, **kwargs)
        _emit({"subsets": [[i + 1 for i in s] for s in subsets]}, compact)
        return EXIT_OK

    if command == "eval":
        p = _load_parameter(args.param)
        value = evaluate(p, _parse_point(args.point))
        _emit({"value": [format_rational(x) for x in value]}, compact)
        return EXIT_OK

    if command == "oracle1d":
        p1 = _load_parameter(args.param, stdin_ok=False)
        p2 = _load_parameter(args.param2)
        equal = exact_equal_1d(p1, p2)
        _emit({"equal": equal}, compact)
        return EXIT_OK if equal else EXIT_NEGATIVE

    if command == "sample-equal":
        p1 = _load_parameter(args.param, stdin_ok=False)
        p2 = _load_parameter(args.param2)
        equal, point = equal_on_samples(p1, p2, args.count, args.seed)
        obj = {"equal": equal}
        if point is not None:
            obj["counterexample"] = [format_rational(x) for x in point]
        _emit(obj, compact)
        return EXIT_OK if equal else EXIT_NEGATIVE

    if command == "plot":
        p = _load_parameter(args.param)
        bbox = _parse_point(args.bbox)
        if len(bbox) != 4:
            raise InputError("bbox must be x0,y0,x1,y1")
        sys.stdout.write(arrangement_svg(p, bbox, args.grid))
        return EXIT_OK

    raise AssertionError(f"unhandled command {command}")


if __name__ == "__main__":
    sys.exit(main())
