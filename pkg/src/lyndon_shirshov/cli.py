"""Command-line front end.

Exit status: 0 on success (and on PASS for ``gsb verify``), 1 when
``gsb verify`` fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path
from typing import Optional, Sequence

from . import lie, rewrite, terms, words
from .algebra import Polynomial, multiply
from .rewrite import RuleSet
from .syntax import ParseError, parse_polynomial, parse_rules
from .words import Alphabet

DEFAULT_MAX_DEG = 5


class UsageError(Exception):
    pass


def _alphabet(spec: str) -> Alphabet:
    try:
        return Alphabet.parse(spec)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--alphabet",
        type=_alphabet,
        required=True,
        help="ordered alphabet, greatest letter first, e.g. a>b>c",
    )
    common.add_argument("--max-deg", type=_positive, default=None, help="degree bound")
    common.add_argument("--json", action="store_true", help="emit JSON")

    rules_opt = argparse.ArgumentParser(add_help=False)
    rules_opt.add_argument(
        "--rules",
        default="s0",
        help="rule set: s0 (default), full, or a rule file",
    )

    parser = argparse.ArgumentParser(
        prog="lyndon-shirshov",
        description="Free anti-commutative and free Lie algebra computations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    alsw = sub.add_parser("alsw", help="associative Lyndon-Shirshov words")
    alsw_sub = alsw.add_subparsers(dest="action", required=True)
    alsw_sub.add_parser("list", parents=[common], help="list ALSWs up to --max-deg")
    check = alsw_sub.add_parser("check", parents=[common], help="test a word")
    check.add_argument("word")

    p = sub.add_parser("factorize", parents=[common], help="Lyndon factorization")
    p.add_argument("word")
    p = sub.add_parser("bracket", parents=[common], help="NLSW of an ALSW")
    p.add_argument("word")

    nlsw = sub.add_parser("nlsw", help="non-associative Lyndon-Shirshov words")
    nlsw_sub = nlsw.add_subparsers(dest="action", required=True)
    nlsw_sub.add_parser("list", parents=[common], help="list NLSWs up to --max-deg")

    sub.add_parser("irr", parents=[common, rules_opt], help="irreducible normal words")
    p = sub.add_parser("nf", parents=[common, rules_opt], help="normal form of EXPR")
    p.add_argument("expr")
    p = sub.add_parser("mul", parents=[common], help="product in AC(X)")
    p.add_argument("left")
    p.add_argument("right")
    p = sub.add_parser("sc", parents=[common], help="Lie bracket in the NLSW basis")
    p.add_argument("left")
    p.add_argument("right")

    gsb = sub.add_parser("gsb", help="Groebner-Shirshov basis checks")
    gsb_sub = gsb.add_subparsers(dest="action", required=True)
    p = gsb_sub.add_parser(
        "verify", parents=[common, rules_opt], help="check all inclusion compositions"
    )
    p.add_argument("--trace", action="store_true", help="include every composition")

    sub.add_parser("count", parents=[common], help="per-degree tallies")
    return parser


def _max_deg(args, fallback: int = DEFAULT_MAX_DEG) -> int:
    return args.max_deg if args.max_deg is not None else fallback


def _rules(args, max_deg: int) -> RuleSet:
    if args.rules == "s0":
        return RuleSet.s0(args.alphabet, max_deg)
    if args.rules == "full":
        return RuleSet.full_jacobi(args.alphabet, max_deg)
    path = Path(args.rules)
    if not path.is_file():
        raise UsageError(f"--rules must be s0, full, or a file; {args.rules!r} is none")
    return RuleSet(args.alphabet, parse_rules(path.read_text(), args.alphabet))


def _poly(text: str, args) -> Polynomial:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        f = parse_polynomial(text, args.alphabet)
    for w in caught:
        print(f"warning: {w.message} in {text!r}", file=sys.stderr)
    return f


def _top_degree(*polys: Polynomial) -> int:
    return max((d for f in polys for d in f.degrees), default=1)


def _emit(args, text_lines, payload) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _poly_payload(f: Polynomial) -> dict:
    return {"text": str(f), "terms": f.to_json()}


def run_command(args) -> int:
    A = args.alphabet
    cmd = args.command

    if cmd == "alsw" and args.action == "list":
        found = words.generate_alsws(A, _max_deg(args))
        _emit(args, [str(u) for u in found], {"alsws": [str(u) for u in found]})
    elif cmd == "alsw":
        u = words.Word.parse(A, args.word)
        ok = words.is_alsw(u)
        _emit(args, ["true" if ok else "false"], {"word": str(u), "alsw": ok})
    elif cmd == "factorize":
        u = words.Word.parse(A, args.word)
        factors = [str(x) for x in words.lyndon_factorize(u)]
        _emit(args, [" ".join(factors)], {"word": str(u), "factors": factors})
    elif cmd == "bracket":
        u = words.Word.parse(A, args.word)
        t = lie.bracket_alsw(u)
        _emit(args, [str(t)], {"word": str(u), "nlsw": str(t)})
    elif cmd == "nlsw":
        found = lie.nlsws(A, _max_deg(args))
        _emit(
            args,
            [str(t) for t in found],
            {"nlsws": [{"word": str(t.word), "nlsw": str(t)} for t in found]},
        )
    elif cmd == "irr":
        d = _max_deg(args)
        found = rewrite.enumerate_irr(_rules(args, d), A, d)
        _emit(args, [str(t) for t in found], {"irr": [str(t) for t in found]})
    elif cmd == "nf":
        f = _poly(args.expr, args)
        g = rewrite.normal_form(f, _rules(args, _max_deg(args, _top_degree(f))))
        _emit(args, [str(g)], _poly_payload(g))
    elif cmd == "mul":
        f, g = _poly(args.left, args), _poly(args.right, args)
        h = multiply(f, g)
        _emit(args, [str(h)], _poly_payload(h))
    elif cmd == "sc":
        f, g = _poly(args.left, args), _poly(args.right, args)
        d = _max_deg(args, _top_degree(f) + _top_degree(g))
        h = rewrite.lie_bracket(f, g, RuleSet.s0(A, d))
        _emit(args, [str(h)], _poly_payload(h))
    elif cmd == "gsb":
        d = _max_deg(args)
        report = rewrite.check_gsb(_rules(args, d), d, trace=args.trace)
        lines = [report.summary()]
        if args.trace:
            for rec in report.records:
                lines.append(
                    f"({rec.f}, {rec.g}) at {rec.occurrence.path_str()} in {rec.ambient}"
                    f" -> {rec.residue}"
                )
        _emit(args, lines, report.to_json(trace=args.trace))
        return 0 if report.passed else 1
    elif cmd == "count":
        d = _max_deg(args)
        alsws = words.generate_alsws(A, d)
        rows = []
        for k in range(1, d + 1):
            normal = terms.normal_words(A, k)
            rows.append(
                {
                    "degree": k,
                    "alsw": sum(1 for u in alsws if len(u) == k),
                    "normal": len(normal),
                    "nlsw": sum(1 for t in normal if lie.is_nlsw(t)),
                }
            )
        lines = ["degree alsw normal nlsw"] + [
            f"{r['degree']} {r['alsw']} {r['normal']} {r['nlsw']}" for r in rows
        ]
        _emit(args, lines, {"counts": rows})
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run_command(args)
    except (UsageError, ValueError) as exc:
        if args.json:
            err = {"error": str(exc)}
            if isinstance(exc, ParseError):
                err["offset"] = exc.offset
            print(json.dumps(err), file=sys.stderr)
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
