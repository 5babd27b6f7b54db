"""Command-line front end.

Numbers use the grammar::

    number    := rat | [rat ("+" | "-")] root-term
    root-term := [rat "*"] "sqrt(" uint ")"
    rat       := ["-"] uint ["/" uint]

Exit codes: 0 success, 2 parse/usage error, 3 domain error, 4 oracle horizon
exhausted under ``--strict``.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence

from .alphabet import Alphabet, make_alphabet
from .engine import SequenceSpec, first_upcross, running_averages
from .exact import DomainError, ExactReal, make_exact, normalize_rational
from .ivset import Direction, Empty, characterize, enumerate_family, membership
from .oracle import search_skip
from .witness import NotSkippable, build_skip_witness

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_HORIZON = 0, 2, 3, 4

_RAT = r"-?\d+(?:/\d+)?"
_NUMBER = re.compile(
    rf"(?P<rat>{_RAT})"
    rf"|(?:(?P<head>{_RAT})(?P<op>[+-]))?(?:(?P<coef>{_RAT})\*)?sqrt\((?P<rad>\d+)\)"
)


class ParseError(ValueError):
    pass


def _rat(text: str) -> Fraction:
    num, _, den = text.partition("/")
    try:
        return normalize_rational(int(num), int(den) if den else 1)
    except DomainError as e:
        raise ParseError(f"{text!r}: {e}") from None


def parse_number(text: str) -> ExactReal:
    s = re.sub(r"\s+", "", text)
    m = _NUMBER.fullmatch(s)
    if m is None:
        raise ParseError(f"cannot parse number {text!r}")
    if m["rat"] is not None:
        return ExactReal.of(_rat(m["rat"]))
    head = _rat(m["head"]) if m["head"] else Fraction(0)
    coef = _rat(m["coef"]) if m["coef"] else Fraction(1)
    if m["op"] == "-":
        coef = -coef
    return make_exact(head, coef, int(m["rad"]))


def parse_list(text: str) -> list[ExactReal]:
    parts = text.split(",")
    if any(not p.strip() for p in parts):
        raise ParseError(f"empty entry in list {text!r}")
    return [parse_number(p) for p in parts]


def _max_n(requested: int) -> int:
    cap = os.environ.get("AVGIV_MAX_N")
    if cap:
        try:
            return min(requested, int(cap))
        except ValueError:
            raise ParseError(f"AVGIV_MAX_N must be an integer, got {cap!r}") from None
    return requested


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {v}")
    return v


def _nonnegative(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    alpha = argparse.ArgumentParser(add_help=False)
    alpha.add_argument("--alphabet", required=True,
                       help='comma-separated increasing letters, e.g. "0,1/2*sqrt(2),1"')

    target = argparse.ArgumentParser(add_help=False)
    target.add_argument("--pi", required=True, help="value to test")
    target.add_argument("--decreasing", action="store_true",
                        help="consider averages going down instead of up")

    p = argparse.ArgumentParser(
        prog="avgiv",
        description="Values that running averages over a finite alphabet cannot skip.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    for name, what in (("ivset", "increasing"), ("dvset", "decreasing")):
        sp = sub.add_parser(name, parents=[common, alpha],
                            help=f"unskippable values for {what} averages")
        sp.add_argument("--count", type=_nonnegative, default=10)

    sub.add_parser("member", parents=[common, alpha, target],
                   help="decide whether --pi is unskippable")
    sub.add_parser("witness", parents=[common, alpha, target],
                   help="build a verified sequence skipping --pi")

    sp = sub.add_parser("oracle", parents=[common, alpha, target],
                        help="brute-force search for a skip of --pi")
    sp.add_argument("--max-n", type=_positive, default=100,
                    help="search horizon (capped by $AVGIV_MAX_N)")
    sp.add_argument("--all-letters", action="store_true",
                    help="try every appended letter, not only the largest")
    sp.add_argument("--strict", action="store_true",
                    help="exit 4 when no skip is found within the horizon")

    sp = sub.add_parser("simulate", parents=[common],
                        help="print consecutive averages and events against --pi")
    sp.add_argument("--sequence", required=True, help="comma-separated terms")
    sp.add_argument("--tail", help="letter repeated after the sequence")
    sp.add_argument("--horizon", type=_positive)
    sp.add_argument("--pi")
    sp.add_argument("--alphabet", help="optional; terms are checked against it")
    return p


_fmt = str


def _cmd_set(args, alphabet: Alphabet, direction: Direction) -> tuple[dict, list[str]]:
    char = characterize(alphabet, direction)
    elems = enumerate_family(char, args.count)
    kind = "IV" if direction is Direction.INCREASING else "DV"
    if isinstance(char, Empty):
        return (
            {"direction": direction.value, "empty": True, "M": None, "elements": []},
            [f"{kind}{alphabet} is empty"],
        )
    lines = [f"{kind}{alphabet}: M = {char.M}"] + [_fmt(x) for x in elems]
    return (
        {"direction": direction.value, "empty": False, "M": char.M,
         "elements": [_fmt(x) for x in elems]},
        lines,
    )


def _cmd_member(args, alphabet, direction):
    pi = parse_number(args.pi)
    res = membership(alphabet, pi, direction)
    verdict = f"member (t = {res.t})" if res.member else "not a member"
    return {"direction": direction.value, "pi": _fmt(pi), "member": res.member,
            "t": res.t}, [f"{pi}: {verdict}"]


def _cmd_witness(args, alphabet, direction):
    pi = parse_number(args.pi)
    res = build_skip_witness(alphabet, pi, direction)
    if isinstance(res, NotSkippable):
        return ({"direction": direction.value, "pi": _fmt(pi),
                 "witness": "not_skippable", "t": res.t},
                [f"{pi} cannot be skipped (family index t = {res.t})"])
    rel = "<" if direction is Direction.INCREASING else ">"
    return (
        {"direction": direction.value, "pi": _fmt(pi),
         "witness": {
             "prefix": [_fmt(x) for x in res.spec.prefix],
             "tail": _fmt(res.spec.tail),
             "step": res.step,
             "below": _fmt(res.below),
             "above": _fmt(res.above),
         }},
        [f"sequence: {res.spec}",
         f"step {res.step} -> {res.step + 1}: {res.below} {rel} {pi} {rel} {res.above}"],
    )


def _cmd_oracle(args, alphabet, direction):
    pi = parse_number(args.pi)
    max_n = _max_n(args.max_n)
    w = search_skip(alphabet, pi, max_n, direction, all_letters=args.all_letters)
    out: dict[str, Any] = {"direction": direction.value, "pi": _fmt(pi),
                           "max_n": max_n, "found": w is not None}
    if w is None:
        out.update(counts=None, n=None)
        return out, [f"no skip of {pi} within horizon {max_n}"]
    out.update(counts=list(w.counts), n=w.n, sum=_fmt(w.sum),
               appended=_fmt(alphabet.values[w.appended]))
    counts = ", ".join(f"{c} x {a}" for c, a in zip(w.counts, alphabet) if c)
    return out, [f"skip after n = {w.n} terms ({counts}), then append "
                 f"{alphabet.values[w.appended]}"]


def _cmd_simulate(args):
    seq = parse_list(args.sequence)
    tail = parse_number(args.tail) if args.tail else None
    alphabet = make_alphabet(parse_list(args.alphabet)) if args.alphabet else None
    if alphabet is not None:
        bad = [x for x in seq + ([tail] if tail is not None else []) if x not in alphabet]
        if bad:
            raise DomainError(f"terms not in alphabet: {', '.join(map(str, bad))}")
    if tail is None:
        horizon = args.horizon or len(seq)
        if horizon > len(seq):
            raise DomainError(
                f"horizon {horizon} exceeds the {len(seq)} given terms; pass --tail"
            )
        terms = seq[:horizon]
    else:
        spec = SequenceSpec(tuple(seq), tail)
        horizon = args.horizon or len(seq) + 10
        terms = [spec.term(n) for n in range(1, horizon + 1)]
    avgs = running_averages(terms)
    out: dict[str, Any] = {"terms": [_fmt(x) for x in terms],
                           "averages": [_fmt(x) for x in avgs]}
    lines = [f"{n:>4}  x={x}  avg={a}" for n, (x, a) in enumerate(zip(terms, avgs), 1)]
    if args.pi is not None:
        pi = parse_number(args.pi)
        events = []
        for n, a in enumerate(avgs, 1):
            if a == pi:
                events.append({"kind": "hit", "step": n})
            if n < len(avgs):
                if a < pi < avgs[n]:
                    events.append({"kind": "skip_up", "step": n})
                elif a > pi > avgs[n]:
                    events.append({"kind": "skip_down", "step": n})
        out["pi"] = _fmt(pi)
        out["events"] = events
        lines += [f"{e['kind']} at step {e['step']}" for e in events] or ["no events"]
        if tail is not None:
            ev = first_upcross(spec, pi)
            out["first_upcross"] = {"kind": ev.kind.value, "step": ev.step}
            lines.append(f"first upward crossing: {ev.kind.value}"
                         + (f" at step {ev.step}" if ev.step else ""))
    return alphabet, out, lines


def run(args: argparse.Namespace) -> tuple[int, dict]:
    if args.command == "simulate":
        alphabet, result, lines = _cmd_simulate(args)
    else:
        alphabet = make_alphabet(parse_list(args.alphabet))
        if args.command in ("ivset", "dvset"):
            d = Direction.INCREASING if args.command == "ivset" else Direction.DECREASING
            result, lines = _cmd_set(args, alphabet, d)
        else:
            d = Direction.DECREASING if args.decreasing else Direction.INCREASING
            handler = {"member": _cmd_member, "witness": _cmd_witness,
                       "oracle": _cmd_oracle}[args.command]
            result, lines = handler(args, alphabet, d)
    doc = {
        "command": args.command,
        "alphabet": [_fmt(x) for x in alphabet] if alphabet is not None else None,
        "result": result,
    }
    code = EXIT_OK
    if args.command == "oracle" and args.strict and not result["found"]:
        code = EXIT_HORIZON
    return code, {"doc": doc, "lines": lines}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, out = run(args)
    except ParseError as e:
        print(f"avgiv: parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except DomainError as e:
        print(f"avgiv: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.json:
        print(json.dumps(out["doc"], sort_keys=True))
    else:
        print("\n".join(out["lines"]))
    return code


if __name__ == "__main__":
    sys.exit(main())
