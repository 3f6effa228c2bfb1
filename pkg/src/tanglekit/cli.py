"""Command-line interface.

Exit codes: 0 success, 2 syntax errors in tangle/fraction input, 3 for
non-rational tangles handed to rational-only operations, 4 for any other
domain error. Expression arguments accept the grammar of textio plus the
cf:2,-3,5 shorthand for continued-fraction vectors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .cf import expand_fraction
from .coloring import closure_coloring_mod, closure_determinant, color_tangle, f_of_matrix, harary_check
from .dance import ADD, TURN, DanceState, Move, apply_move, hint, solve_target, word_to_text
from .errors import NotRational, ParseError, TangleError
from .fraction import Fraction, ZERO
from .server import serve
from .tangle import (
    INFINITY_TANGLE,
    canonical_form,
    equivalent,
    fraction_of,
    standard_form_vector,
    to_standard_form,
)
from .textio import format_cf_tangle, parse_cli_expr, parse_fraction


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tanglekit", description="exact rational-tangle calculus")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fraction", help="tangle fraction of an expression")
    p.add_argument("expr")

    p = sub.add_parser("canonical", help="unique canonical form of a rational tangle")
    p.add_argument("expr")

    p = sub.add_parser("equiv", help="decide isotopy of two rational tangles")
    p.add_argument("a")
    p.add_argument("b")

    p = sub.add_parser("vector", help="standard-form twist vector of an expression")
    p.add_argument("expr")

    p = sub.add_parser("color", help="integral coloring of a rational tangle")
    p.add_argument("expr")
    p.add_argument("--start", default="1,0", help="starting colors top,bottom (default 1,0)")
    p.add_argument("--mod", type=int, default=None, help="also reduce the closure coloring mod P")

    p = sub.add_parser("det", help="determinant of the numerator closure")
    p.add_argument("expr")

    p = sub.add_parser("harary", help="distinct-colors sweep over canonical tangles")
    p.add_argument("--max-crossings", type=int, required=True)
    p.add_argument("--json", action="store_true")

    dance = sub.add_parser("dance", help="the turn/add generation game")
    dsub = dance.add_subparsers(dest="dance_command", required=True)
    p = dsub.add_parser("solve", help="move word reaching a target fraction from 0")
    p.add_argument("target")
    p = dsub.add_parser("play", help="interactive game (reads T/A/hint/quit lines)")
    p.add_argument("--target", default=None)

    p = sub.add_parser("serve", help="run the HTTP API")
    p.add_argument("--port", type=int, default=None)
    p.add_argument("--state", default=None, help="append-only session snapshot file")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except ParseError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return 2
    except NotRational as exc:
        print(f"not a rational tangle: {exc}", file=sys.stderr)
        return 3
    except TangleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


def _dispatch(args) -> int:
    if args.command == "fraction":
        print(fraction_of(parse_cli_expr(args.expr)))
        return 0
    if args.command == "canonical":
        form = canonical_form(parse_cli_expr(args.expr))
        print("[inf]" if form is INFINITY_TANGLE else format_cf_tangle(form))
        return 0
    if args.command == "equiv":
        same = equivalent(parse_cli_expr(args.a), parse_cli_expr(args.b))
        print("equivalent" if same else "not equivalent")
        return 0
    if args.command == "vector":
        expr = parse_cli_expr(args.expr)
        vec = standard_form_vector(expr)
        if vec is None:
            vec = to_standard_form(expr).vector
        print(json.dumps(list(vec)))
        return 0
    if args.command == "color":
        return _cmd_color(args)
    if args.command == "det":
        form = canonical_form(parse_cli_expr(args.expr))
        if form is INFINITY_TANGLE:
            print(1)  # numerator closure of the infinite tangle is the unknot
        else:
            print(closure_determinant(color_tangle(form, 1, 0)))
        return 0
    if args.command == "harary":
        return _cmd_harary(args)
    if args.command == "dance":
        return _cmd_dance(args)
    if args.command == "serve":
        serve(args.port, args.state)
        return 0
    raise AssertionError(f"unhandled command {args.command!r}")


def _cmd_color(args) -> int:
    expr = parse_cli_expr(args.expr)
    form = canonical_form(expr)
    if form is INFINITY_TANGLE:
        raise TangleError("the infinite tangle has no twist coloring")
    try:
        top, bottom = (int(part) for part in args.start.split(","))
    except ValueError:
        raise TangleError("--start expects two integers like 1,0") from None
    colored = color_tangle(form, top, bottom)
    m = colored.matrix
    print(f"vector    {json.dumps(list(form))}")
    print(f"matrix    nw={m.nw} ne={m.ne} sw={m.sw} se={m.se}")
    print(f"fraction  {f_of_matrix(m)}")
    print(f"arcColors {json.dumps(list(colored.arc_colors))}")
    if (top, bottom) in ((1, 0), (0, 1)):
        print(f"det       {closure_determinant(colored)}")
    if args.mod is not None:
        residues = closure_coloring_mod(colored, args.mod)
        print(f"modColors {json.dumps(list(residues))}")
    return 0


def _cmd_harary(args) -> int:
    report = harary_check(args.max_crossings)
    if args.json:
        print(json.dumps([inst.to_json() for inst in report]))
        return 0
    failures = 0
    for inst in report:
        status = "ok" if inst.passed else "FAIL"
        failures += not inst.passed
        det = inst.determinant
        mod = "-" if inst.mod_colors is None else f"{len(set(inst.mod_colors))} residues"
        print(f"{status}  {json.dumps(list(inst.vector))}  det={det}  {mod}")
    print(f"{len(report)} instances, {failures} failures")
    return 0 if failures == 0 else 4


def _cmd_dance(args) -> int:
    if args.dance_command == "solve":
        print(word_to_text(solve_target(parse_fraction(args.target))))
        return 0
    # play: a line-mode loop against the engine
    if args.target is not None:
        target = parse_fraction(args.target)
    else:
        rng = random.Random()
        target = Fraction(rng.randint(-12, 12), rng.randint(1, 12))
    state = DanceState(ZERO, target)
    print(f"target {target}; moves: T (turn), A (add), hint, quit")
    _print_state(state)
    for line in sys.stdin:
        word = line.strip().upper()
        if word in ("QUIT", "Q"):
            break
        if word == "HINT":
            print(f"hint: {hint(state).value}")
            continue
        if word in ("T", "A"):
            state = apply_move(state, Move(word))
            _print_state(state)
            if state.solved:
                print(f"solved in {len(state.history)} moves")
                return 0
            continue
        print("unrecognized input; use T, A, hint, or quit", file=sys.stderr)
    return 0


def _print_state(state: DanceState) -> None:
    if state.current.is_infinite:
        vec = "[inf]"
    else:
        vec = format_cf_tangle(expand_fraction(state.current))
    print(f"current {state.current}  canonical {vec}")


if __name__ == "__main__":
    raise SystemExit(main())
