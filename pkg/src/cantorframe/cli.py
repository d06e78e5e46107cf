"""Command-line interface.

Exit codes: 0 success, 1 parse error, 2 precondition violation, 3 budget
exhausted, 4 law-suite counterexample.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence, TextIO

from .alexandroff import Direction, ball_image, density_witness, tphi, tphi_ray, two_preimages
from .balls import MAX_DEPTH, ball_children, ball_compare, ball_meet, check_depth, check_prime, phi_eval
from .clopen import (
    clopen_complement,
    clopen_imp,
    clopen_join,
    clopen_leq,
    clopen_meet,
)
from .compactness import CoverStream, disjointify, finite_subcover, separate
from .errors import CantorFrameError, LiteralSyntaxError
from .laws import SUITES, LawParams, run_laws
from .literals import (
    parse_ball,
    parse_clopen,
    parse_digits,
    parse_dyadic,
    parse_interval_set,
    parse_tail,
)
from .regularity import UniformCoverIndex, punctured_open, split_atomless, star
from .retraction import build_f, deinterleave, interleave, retract_check


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # usage errors are parse errors (exit 1)
        self.print_usage(sys.stderr)
        raise LiteralSyntaxError(message)


def _bool(v: bool) -> str:
    return "true" if v else "false"


def _read_lines(source: str | None, stdin: TextIO) -> list[str]:
    if source is None or source == "-":
        text = stdin.read()
    else:
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def cmd_ball(args, out: TextIO, stdin: TextIO) -> int:
    b1 = parse_ball(args.ball, args.max_depth)
    if args.op == "children":
        for c in ball_children(b1):
            print(c, file=out)
        return 0
    if args.other is None:
        raise LiteralSyntaxError(f"ball {args.op} needs two balls")
    b2 = parse_ball(args.other, args.max_depth)
    if args.op == "compare":
        print(ball_compare(b1, b2), file=out)
    else:
        m = ball_meet(b1, b2)
        print("Empty" if m is None else m, file=out)
    return 0


_BINARY_CLOPEN = {"meet": clopen_meet, "join": clopen_join, "imp": clopen_imp}


def cmd_clopen(args, out: TextIO, stdin: TextIO) -> int:
    xs = [parse_clopen(t, args.max_depth) for t in args.clopens]
    unary = args.op in ("normalize", "neg")
    if len(xs) != (1 if unary else 2):
        raise LiteralSyntaxError(f"clopen {args.op} takes {1 if unary else 2} operand(s)")
    if args.op == "normalize":
        print(xs[0], file=out)
    elif args.op == "neg":
        print(clopen_complement(xs[0]), file=out)
    elif args.op == "leq":
        print(_bool(clopen_leq(*xs)), file=out)
    else:
        print(_BINARY_CLOPEN[args.op](*xs), file=out)
    return 0


def cmd_cover(args, out: TextIO, stdin: TextIO) -> int:
    if args.op == "separate":
        if len(args.inputs) != 2:
            raise LiteralSyntaxError("cover separate takes two clopens")
        a, b = (parse_clopen(t, args.max_depth) for t in args.inputs)
        print(separate(a, b), file=out)
        return 0
    if len(args.inputs) > 1:
        raise LiteralSyntaxError("expected at most one input file")
    lines = _read_lines(args.inputs[0] if args.inputs else None, stdin)
    cover = [parse_clopen(ln, args.max_depth) for ln in lines]
    if args.op == "disjointify":
        for c in disjointify(cover):
            print(c, file=out)
        return 0
    p = args.p if not cover else cover[0].p
    check_prime(p)
    for idx, c in finite_subcover(CoverStream(p, cover, args.budget)):
        print(f"{idx}\t{c}", file=out)
    return 0


def cmd_uniform(args, out: TextIO, stdin: TextIO) -> int:
    b = parse_ball(args.ball, args.max_depth)
    cutoff = args.cutoff if args.cutoff is not None else b.depth
    print(star(b, UniformCoverIndex(args.n, check_depth(cutoff, args.max_depth))), file=out)
    return 0


def cmd_perfect(args, out: TextIO, stdin: TextIO) -> int:
    if args.op == "split":
        if args.ball is None:
            raise LiteralSyntaxError("perfect split needs a ball")
        for b in split_atomless(parse_ball(args.ball, args.max_depth)):
            print(b, file=out)
    else:
        if args.depth is None:
            raise LiteralSyntaxError("perfect punctured needs --depth")
        digits = parse_digits(args.prefix)
        print(punctured_open(digits, check_depth(args.depth, args.max_depth), check_prime(args.p)),
              file=out)
    return 0


def cmd_phi(args, out: TextIO, stdin: TextIO) -> int:
    if args.op == "eval":
        print(phi_eval(parse_tail(args.value)), file=out)
    elif args.op == "preimages":
        for t in two_preimages(parse_dyadic(args.value)):
            print(t, file=out)
    else:
        print(ball_image(parse_ball(args.value, args.max_depth)), file=out)
    return 0


def cmd_tphi(args, out: TextIO, stdin: TextIO) -> int:
    if args.op == "witness":
        if args.lo is None or args.hi is None:
            raise LiteralSyntaxError("tphi witness needs --lo and --hi")
        b, K = density_witness(parse_dyadic(args.lo), parse_dyadic(args.hi))
        print(f"{b}\t{K}", file=out)
        return 0
    K = check_depth(args.depth, args.max_depth)
    if args.op == "ray":
        if args.value is None:
            raise LiteralSyntaxError("tphi ray needs a dyadic value")
        q = parse_dyadic(args.value)
        check_depth(q.exponent + K, args.max_depth)
        print(tphi_ray(q, Direction(args.dir), K), file=out)
    else:
        text = args.interval if args.interval is not None else args.value
        if text is None:
            raise LiteralSyntaxError("tphi interval needs an interval literal")
        x = parse_interval_set(text)
        for c in x.components:
            for end in (c.lo, c.hi):
                if end is not None:
                    check_depth(end.exponent + K, args.max_depth)
        print(tphi(x, K), file=out)
    return 0


def cmd_retract(args, out: TextIO, stdin: TextIO) -> int:
    x = parse_clopen(args.x, args.max_depth)
    K = check_depth(args.depth if args.depth is not None else x.max_depth, args.max_depth)
    if args.op == "build":
        f = build_f(x, K)
        for b in sorted(f.table, key=lambda b: b.sort_key):
            print(f"{b.inner_literal()} -> {f(b).inner_literal()}", file=out)
    report = retract_check(x, K, cases=args.cases, seed=args.seed)
    for line in report.lines():
        print(line, file=out)
    return 0 if report.ok else 4


def cmd_interleave(args, out: TextIO, stdin: TextIO) -> int:
    if args.split:
        if len(args.balls) != 1:
            raise LiteralSyntaxError("interleave --split takes one ball")
        for b in deinterleave(parse_ball(args.balls[0], args.max_depth)):
            print(b, file=out)
        return 0
    if len(args.balls) != 2:
        raise LiteralSyntaxError("interleave takes two balls")
    b1, b2 = (parse_ball(t, args.max_depth) for t in args.balls)
    print(interleave(b1, b2), file=out)
    return 0


def cmd_laws(args, out: TextIO, stdin: TextIO) -> int:
    if args.op == "list":
        for name in sorted(SUITES):
            print(name, file=out)
        return 0
    suites = None
    if args.suite:
        suites = [s for chunk in args.suite for s in chunk.split(",") if s]
        unknown = sorted(set(suites) - set(SUITES))
        if unknown:
            raise LiteralSyntaxError(f"unknown suite(s): {', '.join(unknown)}")
    lp = LawParams(p=check_prime(args.p), depth=check_depth(args.depth, 8),
                   cases=args.cases, seed=args.seed)
    lines, ok = run_laws(lp, suites)
    for line in lines:
        print(line, file=out)
    return 0 if ok else 4


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cantorframe", description=__doc__.splitlines()[0])
    parser.add_argument("--max-depth", type=int, default=MAX_DEPTH,
                        help="reject inputs deeper than this (default %(default)s)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("ball", help="compare, meet or split balls")
    p.add_argument("op", choices=["compare", "meet", "children"])
    p.add_argument("ball")
    p.add_argument("other", nargs="?")
    p.set_defaults(func=cmd_ball)

    p = sub.add_parser("clopen", help="Boolean algebra of clopens")
    p.add_argument("op", choices=["normalize", "meet", "join", "neg", "imp", "leq"])
    p.add_argument("clopens", nargs="+")
    p.set_defaults(func=cmd_clopen)

    p = sub.add_parser("cover", help="finite subcovers, partitions, separation")
    p.add_argument("op", choices=["subcover", "disjointify", "separate"])
    p.add_argument("inputs", nargs="*", help="cover file (default stdin) or, for separate, two clopens")
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("--p", type=int, default=2, help="prime for an empty stream")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("uniform", help="stars in the uniform covers U_n")
    p.add_argument("op", choices=["star"])
    p.add_argument("ball")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cutoff", type=int)
    p.set_defaults(func=cmd_uniform)

    p = sub.add_parser("perfect", help="atomlessness and punctured dense opens")
    p.add_argument("op", choices=["split", "punctured"])
    p.add_argument("ball", nargs="?")
    p.add_argument("--prefix", default="", help="comma separated digits of the point")
    p.add_argument("--depth", type=int)
    p.add_argument("--p", type=int, default=2)
    p.set_defaults(func=cmd_perfect)

    p = sub.add_parser("phi", help="the digit-reading map Z_2 -> [0,1]")
    p.add_argument("op", choices=["eval", "preimages", "image"])
    p.add_argument("value")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("tphi", help="truncated image of interval sets in clopens of Z_2")
    p.add_argument("op", choices=["ray", "interval", "witness"])
    p.add_argument("value", nargs="?")
    p.add_argument("--interval")
    p.add_argument("--dir", choices=[d.value for d in Direction], default="below")
    p.add_argument("--depth", type=int, default=0)
    p.add_argument("--lo")
    p.add_argument("--hi")
    p.set_defaults(func=cmd_tphi)

    p = sub.add_parser("retract", help="the kernel-x endomorphism and retraction")
    p.add_argument("op", choices=["build", "check"])
    p.add_argument("--x", required=True)
    p.add_argument("--depth", type=int)
    p.add_argument("--cases", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_retract)

    p = sub.add_parser("interleave", help="digit interleaving of two balls of Z_2")
    p.add_argument("balls", nargs="+")
    p.add_argument("--split", action="store_true", help="deinterleave one ball")
    p.set_defaults(func=cmd_interleave)

    p = sub.add_parser("laws", help="run the property suites")
    p.add_argument("op", choices=["run", "list"])
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--cases", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--suite", action="append", help="suite name(s), repeatable or comma separated")
    p.set_defaults(func=cmd_laws)
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None,
        err: TextIO | None = None, stdin: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    stdin = stdin or sys.stdin
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out, stdin)
    except CantorFrameError as exc:
        print(f"error: {exc}", file=err)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=err)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
