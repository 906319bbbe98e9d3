"""Command-line front end.

Commands:

* ``convert``  - positive and even expansions, sign/type data, knot or link;
* ``snake``    - ASCII snake graph, tile count, matching count;
* ``fpoly``    - specialized (default) or full matching generating function;
* ``jones``    - Jones polynomial from a chosen engine, or all of them;
* ``verify``   - exhaustive cross-check sweeps up to a bound;
* ``volume``   - hyperbolic volume bounds.

Input is a fraction ``p/q``, a bracketed list ``[c1,c2,...]``, or a bare
comma list.  Entry lists that are simultaneously valid positive and valid
even continued fractions need ``--even`` or ``--positive`` to disambiguate
(the CLI defaults to positive).

Exit codes: 0 success, 1 usage or parse error, 2 domain error, 3 engine
cross-check mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import verify as verify_mod
from .cfrac import (EvenCF, PositiveCF, Rat, even_cf_for_link, positive_cf,
                    sign_sequence, type_sequence)
from .errors import (AmbiguousCF, CrossCheckMismatch, ParseError,
                     TwoBridgeError)
from .jones import (JonesResult, boundary_coefficients, jones_direct,
                    jones_recursive, jones_via_f, mirror, oriented_even_cf,
                    specialized_f_even, specialized_f_positive, volume_bounds)
from .laurent import HLPoly
from .snake import (count_matchings, f_polynomial, render_ascii,
                    snake_from_even, snake_from_positive)

COMMANDS = ("convert", "snake", "fpoly", "jones", "verify", "volume")


@dataclass(frozen=True)
class Request:
    command: str
    input: str
    engine: str = "all"
    format: str = "text"
    hint: str = None
    max_sum: int = 10
    full: bool = False


class UsageError(Exception):
    pass


def parse_input(s: str, hint: str = None):
    """Parse ``p/q``, ``[c1,...]`` or ``c1,...`` into Rat/PositiveCF/EvenCF.

    Entry lists: all entries even and nonzero makes an EvenCF, all entries
    >= 1 a PositiveCF; lists valid as both follow ``hint`` ("even" or
    "positive") and raise :class:`AmbiguousCF` without one.
    """
    s = s.strip()
    if not s:
        raise ParseError("empty input", 0)
    if "/" in s:
        try:
            num, den = s.split("/")
            return Fraction(int(num), int(den))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad fraction {s!r}: {exc}", 0) from None
    body = s
    if s.startswith("["):
        if not s.endswith("]"):
            raise ParseError("unbalanced brackets", len(s) - 1)
        body = s[1:-1]
    elif "," not in s:
        try:
            return Fraction(int(s))
        except ValueError:
            raise ParseError(f"not a number or entry list: {s!r}", 0) from None
    entries = []
    offset = 1 if s.startswith("[") else 0
    pos = 0
    for chunk in body.split(","):
        try:
            entries.append(int(chunk.strip()))
        except ValueError:
            raise ParseError(f"bad entry {chunk.strip()!r}",
                             offset + pos) from None
        pos += len(chunk) + 1
    if not entries:
        raise ParseError("empty entry list", offset)
    can_even = all(e and e % 2 == 0 for e in entries)
    can_pos = all(e >= 1 for e in entries)
    if hint == "even":
        if not can_even:
            raise ParseError(f"{entries} is not an even continued fraction", offset)
        return EvenCF(tuple(entries))
    if hint == "positive":
        if not can_pos:
            raise ParseError(f"{entries} is not a positive continued fraction",
                             offset)
        return PositiveCF(tuple(entries))
    if can_even and can_pos:
        raise AmbiguousCF(f"{entries} could be positive or even; "
                          "pass --positive or --even")
    if can_even:
        return EvenCF(tuple(entries))
    if can_pos:
        return PositiveCF(tuple(entries))
    raise ParseError(f"{entries} is neither a positive nor an even "
                     "continued fraction", offset)


def _exp_str(e) -> str:
    e = Fraction(e)
    return str(e.numerator) if e.denominator == 1 else f"{e.numerator}/2"


def _poly_payload(p: HLPoly):
    return [[_exp_str(Fraction(u, 2)), c] for u, c in p.items()]


def poly_from_payload(pairs) -> HLPoly:
    """Inverse of the JSON coefficient encoding."""
    terms = {}
    for exp, coeff in pairs:
        exp = str(exp)
        units = int(exp[:-2]) if exp.endswith("/2") else 2 * int(exp)
        terms[units] = int(coeff)
    return HLPoly(terms)


def _rat_payload(r: Rat):
    return {"num": r.numerator, "den": r.denominator}


def _as_rat(obj) -> Rat:
    if isinstance(obj, Fraction):
        return obj
    return obj.value()


def _oriented_even(obj):
    """The orientation-carrying even CF for any accepted input kind."""
    if isinstance(obj, EvenCF):
        return obj
    return oriented_even_cf(_as_rat(obj))


def _jones_engine(obj, engine: str) -> JonesResult:
    if engine == "recursive":
        return jones_recursive(_oriented_even(obj))
    if engine == "fpoly":
        return jones_via_f(_oriented_even(obj))
    if engine == "direct":
        if isinstance(obj, PositiveCF):
            return jones_direct(obj)
        if isinstance(obj, EvenCF):
            r = obj.value()
            if r > 0:
                return jones_direct(positive_cf(r))
            return mirror(jones_direct(positive_cf(-r)))
        return jones_direct(positive_cf(obj))
    raise UsageError(f"unknown engine {engine!r}")


def run(req: Request) -> dict:
    """Execute a request; returns a report dict ready for :func:`emit`."""
    if req.command == "verify":
        counts = verify_mod.run_verify(max_sum=req.max_sum,
                                       max_p=max(4 * req.max_sum, 20))
        return {"command": "verify", "max_sum": req.max_sum,
                "checks": counts, "failures": 0}

    obj = parse_input(req.input, req.hint)
    report = {"command": req.command, "input": req.input}

    if req.command == "convert":
        r = _as_rat(obj)
        if isinstance(obj, PositiveCF):
            pos = obj
        else:
            pos = positive_cf(abs(r))  # negative even cfs describe mirrors
        report["value"] = _rat_payload(r)
        report["positive_cf"] = list(pos.entries)
        if isinstance(obj, EvenCF):
            ev, substituted = obj, False
        else:
            ev = even_cf_for_link(r)
            substituted = (r.numerator * r.denominator) % 2 == 1
        report["even_cf"] = list(ev.entries)
        report["even_cf_value"] = _rat_payload(ev.value())
        report["substituted"] = substituted
        report["sign_sequence"] = list(sign_sequence(ev).signs)
        report["type_sequence"] = list(type_sequence(ev).types)
        report["classification"] = ("knot" if r.numerator % 2 else
                                    "2-component link")
        return report

    if req.command == "snake":
        g = (snake_from_even(obj) if isinstance(obj, EvenCF)
             else snake_from_positive(obj if isinstance(obj, PositiveCF)
                                      else positive_cf(obj)))
        report["value"] = _rat_payload(abs(_as_rat(obj)))
        report["tile_count"] = g.d
        report["step_word"] = g.step_word()
        report["matching_count"] = count_matchings(g)
        report["ascii"] = render_ascii(g)
        return report

    if req.command == "fpoly":
        if req.full:
            g = (snake_from_even(obj) if isinstance(obj, EvenCF)
                 else snake_from_positive(obj if isinstance(obj, PositiveCF)
                                          else positive_cf(obj)))
            F = f_polynomial(g)
            report["full"] = True
            report["terms"] = [[sorted(tiles), c] for tiles, c in F.subsets()]
            report["text"] = F.to_text()
            return report
        if isinstance(obj, EvenCF):
            F = specialized_f_even(obj)
        else:
            F = specialized_f_positive(obj if isinstance(obj, PositiveCF)
                                       else positive_cf(obj))
        report["full"] = False
        report["coefficients"] = _poly_payload(F)
        report["text"] = F.to_text()
        report["latex"] = F.to_latex()
        return report

    if req.command == "jones":
        engines = ((["recursive", "direct", "fpoly"]) if req.engine == "all"
                   else [req.engine])
        results = {name: _jones_engine(obj, name) for name in engines}
        polys = {name: res.poly for name, res in results.items()}
        if len(set(polys.values())) > 1:
            raise CrossCheckMismatch(
                f"engines disagree on {req.input}: "
                + "; ".join(f"{n}: {p}" for n, p in polys.items()),
                engines=tuple(polys), value=req.input)
        res = next(iter(results.values()))
        report["value"] = _rat_payload(abs(_as_rat(obj)))
        report["positive_cf"] = list(positive_cf(abs(_as_rat(obj))).entries)
        report["even_cf"] = list(_oriented_even(obj).entries)
        report["degree"] = _exp_str(res.degree)
        report["leading_sign"] = res.leading_sign
        report["width"] = _exp_str(res.poly.width())
        report["coefficients"] = _poly_payload(res.poly)
        report["engine"] = req.engine
        report["checks"] = {name: "ok" for name in engines}
        report["text"] = res.poly.to_text()
        report["latex"] = res.poly.to_latex()
        return report

    if req.command == "volume":
        cf = obj if isinstance(obj, PositiveCF) else positive_cf(_as_rat(obj))
        lower, upper = volume_bounds(cf)
        report["positive_cf"] = list(cf.entries)
        report["lower"] = lower
        report["upper"] = upper
        report["boundary_coefficients"] = list(boundary_coefficients(cf))
        return report

    raise UsageError(f"unknown command {req.command!r}")


def emit(report: dict, fmt: str) -> str:
    """Render a report as text, json, or latex (deterministic per input)."""
    if fmt == "json":
        return json.dumps(report, indent=2)
    if fmt == "latex":
        if "latex" not in report:
            raise UsageError(f"no latex form for {report['command']!r} output")
        return report["latex"]
    command = report["command"]
    lines = []
    if command == "convert":
        v = report["value"]
        lines.append(f"value: {v['num']}/{v['den']}")
        lines.append(f"positive cf: {report['positive_cf']}")
        ev_line = f"even cf: {report['even_cf']}"
        if report["substituted"]:
            w = report["even_cf_value"]
            ev_line += f"  (substituted partner fraction {w['num']}/{w['den']})"
        lines.append(ev_line)
        fmt_signs = lambda signs: "(" + ",".join("+" if s > 0 else "-"
                                                 for s in signs) + ")"
        lines.append(f"sign sequence: {fmt_signs(report['sign_sequence'])}")
        lines.append(f"type sequence: {fmt_signs(report['type_sequence'])}")
        lines.append(f"classification: {report['classification']}")
    elif command == "snake":
        lines.append(report["ascii"])
        lines.append(f"tiles: {report['tile_count']}  "
                     f"steps: {report['step_word'] or '-'}  "
                     f"matchings: {report['matching_count']}")
    elif command == "fpoly":
        lines.append(report["text"])
    elif command == "jones":
        lines.append(report["text"])
        lines.append(f"degree: {report['degree']}  "
                     f"leading sign: {report['leading_sign']:+d}  "
                     f"width: {report['width']}  engine: {report['engine']}")
    elif command == "verify":
        for name, count in report["checks"].items():
            lines.append(f"{name}: {count} inputs checked")
        lines.append("failures: 0")
    elif command == "volume":
        lines.append(f"positive cf: {report['positive_cf']}")
        lines.append(f"{report['lower']:.5f} < volume < {report['upper']:.5f}")
    return "\n".join(lines)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="twobridge",
                     description="Exact Jones polynomials of 2-bridge links "
                                 "from continued fractions.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("input", nargs="?", default="",
                        help="fraction p/q, bracketed list [c1,c2,...], or "
                             "bare comma list")
    parser.add_argument("--engine", default="all",
                        choices=("recursive", "direct", "fpoly", "all"))
    parser.add_argument("--format", default="text",
                        choices=("text", "json", "latex"))
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--even", action="store_true",
                       help="read an ambiguous entry list as an even cf")
    group.add_argument("--positive", action="store_true",
                       help="read an ambiguous entry list as a positive cf")
    parser.add_argument("--max-sum", type=int, default=10,
                        help="sweep bound for the verify command")
    parser.add_argument("--full", action="store_true",
                        help="fpoly: emit the full tile-variable polynomial")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    where = ""
    try:
        args = parser.parse_args(argv)
        where = f" [{args.command}]"
        if args.command != "verify" and not args.input:
            raise UsageError(f"command {args.command!r} needs an input")
        hint = "even" if args.even else ("positive" if args.positive else None)
        if hint is None and args.command != "verify":
            hint = "positive" if _is_ambiguous(args.input) else None
        req = Request(command=args.command, input=args.input,
                      engine=args.engine, format=args.format, hint=hint,
                      max_sum=args.max_sum, full=args.full)
        report = run(req)
        print(emit(report, args.format))
        return 0
    except (UsageError, ParseError) as exc:
        print(f"error{where}: {exc}", file=sys.stderr)
        return 1
    except CrossCheckMismatch as exc:
        print(f"cross-check mismatch{where}: {exc}", file=sys.stderr)
        return 3
    except TwoBridgeError as exc:
        print(f"error{where}: {exc}", file=sys.stderr)
        return 2


def _is_ambiguous(s: str) -> bool:
    try:
        parse_input(s)
    except AmbiguousCF:
        return True
    except TwoBridgeError:
        pass
    return False
