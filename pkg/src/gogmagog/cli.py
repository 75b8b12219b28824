"""Command-line front end.

Subcommands: validate, convert, schutzenberger, count, enumerate,
verify, stats.  Exit status 0 on success, 1 when validation or
verification fails, 2 for usage errors; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from pathlib import Path

from .asm import asm_from_json, asm_to_gog, asm_to_json, format_asm, gog_to_asm, parse_asm, validate_asm
from .bijection import (
    InvalidGogamInput,
    gog_to_gogam_n2,
    gogam_to_gog_n2,
    magog_row_statistic,
    statistic_x11,
)
from .enumeration import SUITES, FamilySpec, count, generate, verify
from .schutzenberger import is_gogam, schutzenberger
from .tableaux import format_tableau, triangle_to_tableau
from .triangles import (
    Family,
    GtTriangle,
    ShapeError,
    format_triangle,
    is_gog,
    is_magog,
    is_trapezoid,
    parse_triangle,
    triangle_from_json,
    triangle_to_json,
    validate_gt,
)

KINDS = ("gt", "gog", "magog", "gogam", "asm")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _load_triangle(path: str) -> GtTriangle:
    text = _read_text(path)
    if text.lstrip().startswith("{"):
        return triangle_from_json(text)
    return parse_triangle(text)


def _load_asm(path: str):
    text = _read_text(path)
    if text.lstrip().startswith("{"):
        return asm_from_json(text)
    return parse_asm(text)


def _emit_triangle(t: GtTriangle, as_json: bool) -> None:
    sys.stdout.write(triangle_to_json(t) + "\n" if as_json else format_triangle(t))


def _cmd_validate(args: argparse.Namespace) -> int:
    problems: list[str] = []
    if args.kind == "asm":
        problems = list(validate_asm(_load_asm(args.file)))
    else:
        t = _load_triangle(args.file)
        problems = [str(v) for v in validate_gt(t)]
        if not problems:
            if args.kind == "gog" and not is_gog(t):
                problems.append("not a Gog triangle (rows or pinned top row)")
            elif args.kind == "magog" and not is_magog(t):
                problems.append("diagonal bound broken: not a Magog triangle")
            elif args.kind == "gogam" and not is_gogam(t):
                problems.append("involution image is not Magog: not a GOGAm triangle")
        if not problems and args.trapezoid is not None and args.kind != "gt":
            fam = Family(args.kind)
            if not is_trapezoid(t, fam, args.trapezoid):
                problems.append(f"not a ({t.n},{args.trapezoid}) {args.kind} trapezoid")
    for p in problems:
        print(p, file=sys.stderr)
    return 1 if problems else 0


_CONVERSIONS = {
    ("gog", "asm"),
    ("asm", "gog"),
    ("magog", "gogam"),
    ("gogam", "magog"),
    ("gog", "gogam"),
    ("gogam", "gog"),
    ("gt", "ssyt"),
}


def _cmd_convert(args: argparse.Namespace) -> int:
    pair = (args.src, args.dst)
    if pair not in _CONVERSIONS:
        print(f"unsupported conversion {args.src} -> {args.dst}", file=sys.stderr)
        return 2
    if pair == ("asm", "gog"):
        _emit_triangle(asm_to_gog(_load_asm(args.file)), args.json)
        return 0
    t = _load_triangle(args.file)
    if pair == ("gog", "asm"):
        a = gog_to_asm(t)
        sys.stdout.write(asm_to_json(a) + "\n" if args.json else format_asm(a))
        return 0
    if pair == ("gt", "ssyt"):
        sys.stdout.write(format_tableau(triangle_to_tableau(t)))
        return 0
    if pair in (("magog", "gogam"), ("gogam", "magog")):
        _emit_triangle(schutzenberger(t), args.json)
        return 0
    # the trapezoid bijection
    if args.trapezoid != 2:
        print("gog <-> gogam conversion requires --trapezoid 2", file=sys.stderr)
        return 2
    try:
        out = gog_to_gogam_n2(t)[0] if pair == ("gog", "gogam") else gogam_to_gog_n2(t)[0]
    except (ValueError, InvalidGogamInput) as exc:
        print(str(exc), file=sys.stderr)
        return 1
    _emit_triangle(out, args.json)
    return 0


def _cmd_schutzenberger(args: argparse.Namespace) -> int:
    t = _load_triangle(args.file)
    problems = validate_gt(t)
    if problems:
        for v in problems:
            print(str(v), file=sys.stderr)
        return 1
    _emit_triangle(schutzenberger(t), args.json)
    return 0


def _family_spec(args: argparse.Namespace) -> FamilySpec:
    return FamilySpec(Family(args.kind), args.n, k=args.k, bound=args.bound)


def _cmd_count(args: argparse.Namespace) -> int:
    if args.kind == "asm":
        from .enumeration import generate_asms

        total = sum(1 for _ in generate_asms(args.n))
    else:
        total = count(_family_spec(args))
    print(total)
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    if args.kind == "asm":
        from .enumeration import generate_asms

        for a in generate_asms(args.n):
            if args.json:
                sys.stdout.write(asm_to_json(a) + "\n")
            else:
                sys.stdout.write(format_asm(a) + "\n")
        return 0
    for t in generate(_family_spec(args)):
        if args.json:
            sys.stdout.write(triangle_to_json(t) + "\n")
        else:
            sys.stdout.write(format_triangle(t) + "\n")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    report = verify(args.suite, args.n, threads=args.threads)
    if args.json:
        print(report.to_json())
    else:
        print(report.render())
    return 0 if report.ok else 1


def _cmd_stats(args: argparse.Namespace) -> int:
    n = args.n
    rules: Counter[str] = Counter()
    per_value: dict[int, list[int]] = {}
    for t in generate(FamilySpec(Family.GOG, n, k=min(2, n))):
        out, trace = gog_to_gogam_n2(t)
        rules.update(rec.rule.value for rec in trace)
        x = statistic_x11(t)
        row = per_value.setdefault(x, [0, 0, 0])
        row[0] += 1
        row[1] += int(statistic_x11(out) == x)
        row[2] += int(magog_row_statistic(schutzenberger(out)) == x)
    if args.json:
        print(
            json.dumps(
                {
                    "n": n,
                    "rules": dict(sorted(rules.items())),
                    "bottom_entry": {
                        str(v): {"count": c, "preserved": p, "row_statistic": r}
                        for v, (c, p, r) in sorted(per_value.items())
                    },
                }
            )
        )
        return 0
    print(f"({n},2) trapezoids: rule usage")
    for rule, times in sorted(rules.items()):
        print(f"  {rule:5s} {times}")
    print("bottom entry: count / preserved by bijection / matched by row statistic")
    for v, (c, p, r) in sorted(per_value.items()):
        print(f"  {v:3d}: {c} / {p} / {r}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gogmagog",
        description="Gog/Magog/GOGAm triangles, ASMs, the Schutzenberger "
        "involution, and the (n,2) trapezoid bijection.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a triangle or matrix file")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--trapezoid", type=int, default=None, metavar="K")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_validate)

    p = sub.add_parser("convert", help="convert between object kinds")
    p.add_argument("--from", dest="src", choices=KINDS, required=True)
    p.add_argument("--to", dest="dst", choices=KINDS + ("ssyt",), required=True)
    p.add_argument("--trapezoid", type=int, default=None, metavar="K")
    p.add_argument("--json", action="store_true")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_convert)

    p = sub.add_parser("schutzenberger", help="apply the involution to a triangle")
    p.add_argument("--json", action="store_true")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_schutzenberger)

    for name in ("count", "enumerate"):
        p = sub.add_parser(name, help=f"{name} members of a family")
        p.add_argument("--kind", choices=KINDS, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, default=None, help="trapezoid width")
        p.add_argument("--bound", type=int, default=None, help="entry bound for raw gt")
        p.add_argument("--json", action="store_true")
        if name == "enumerate":
            p.add_argument(
                "--threads",
                type=int,
                default=1,
                help="accepted for interface stability; output order is "
                "canonical regardless",
            )
        p.set_defaults(fn=_cmd_count if name == "count" else _cmd_enumerate)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("stats", help="rule and statistic tables for (n,2) trapezoids")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_stats)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ShapeError, FileNotFoundError, ValueError) as exc:
        print(str(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
