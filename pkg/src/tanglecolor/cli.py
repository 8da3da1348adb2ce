"""``tanglecolor`` command line.

Exit status: 0 on success, 1 for a domain error (non-prime p, disconnected
diagram, ...), 2 for usage and parse errors.
"""

import argparse
import os
import sys

from . import coloring, diagram, oracle
from .errors import ParseError, TangleColorError
from .notation import (parse_any, parse_conway, parse_tangle_file,
                       serialize_diagram, serialize_report)


class _UsageError(Exception):
    pass


def _read(path):
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from None


def _load(path):
    return parse_any(_read(path))


def _load_closed(path):
    D = _load(path)
    if isinstance(D, diagram.Tangle):
        raise _UsageError(f"{path} is a tangle file; a closed diagram is needed")
    return D


def _load_tangle(path):
    return parse_tangle_file(_read(path))


def _text(record) -> str:
    lines = []
    for key, value in record.items():
        if isinstance(value, bool):
            value = str(value).lower()
        elif value is None:
            value = "none"
        if isinstance(value, list) and value and isinstance(value[0], list):
            lines.append(f"{key}:")
            lines.extend("  " + " ".join(map(str, row)) for row in value)
        elif isinstance(value, list):
            lines.append(f"{key}: " + " ".join(map(str, value)))
        elif isinstance(value, str) and "\n" in value:
            lines.append(f"{key}:")
            lines.extend("  " + row for row in value.splitlines())
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def _emit(args, record):
    if args.format == "json":
        sys.stdout.write(serialize_report(record) + "\n")
    else:
        sys.stdout.write(_text(record))


def _write_or_print(args, text, record):
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    if args.format == "json":
        sys.stdout.write(serialize_report(record) + "\n")
    elif not args.output:
        sys.stdout.write(text)


# ---------------------------------------------------------------- commands

def cmd_parse(args):
    D = _load(args.file)
    part = diagram.arcs(D)
    record = {"kind": "tangle" if isinstance(D, diagram.Tangle) else "diagram",
              "crossings": len(D.crossings), "edges": len(D.edges),
              "free_loops": D.free_loops, "arcs": part.arc_count,
              "components": diagram.connected_components(D)}
    if isinstance(D, diagram.Tangle):
        record["n"] = D.n
        record["boundary"] = list(D.boundary)
    _emit(args, record)


def cmd_color(args):
    _emit(args, coloring.count_colorings(_load_closed(args.file), args.p).as_record())


def cmd_count(args):
    D = _load(args.file)
    count = coloring.count_colorings_mod_m(D, args.m)
    _emit(args, {"m": args.m, "count": str(count)})


def cmd_det(args):
    _emit(args, {"determinant": str(coloring.determinant(_load_closed(args.file)))})


def cmd_primes(args):
    D = _load_closed(args.file)
    det = coloring.determinant(D)
    _emit(args, {"bound": args.bound, "determinant": str(det),
                 "primes": coloring.colorable_primes(D, args.bound)})


def cmd_boundary(args):
    _emit(args, coloring.boundary_space(_load_tangle(args.file), args.p).as_record())


def cmd_compare(args):
    T1, T2 = _load_tangle(args.first), _load_tangle(args.second)
    _emit(args, coloring.compare_boundary(T1, T2, args.p).as_record())


def cmd_build(args):
    word = parse_conway(" ".join(args.word))
    T = diagram.build_rational(word)
    text = serialize_diagram(T)
    record = {"word": str(word), "fraction": str(diagram.fraction(word)),
              "tangle": text}
    _write_or_print(args, text, record)


def cmd_closure(args):
    T = _load_tangle(args.file)
    close = (diagram.numerator_closure if args.type == "numerator"
             else diagram.denominator_closure)
    D = close(T)
    text = serialize_diagram(D)
    _write_or_print(args, text, {"type": args.type, "diagram": text})


def cmd_fraction(args):
    f = diagram.fraction(parse_conway(" ".join(args.word)))
    record = {"numerator": str(f.numerator), "denominator": str(f.denominator)}
    if args.format == "json":
        _emit(args, record)
    else:
        sys.stdout.write(f"fraction: {f}\n")


def cmd_oracle_count(args):
    D = _load(args.file)
    _emit(args, {"m": args.m, "count": str(oracle.brute_force_count(D, args.m))})


def cmd_oracle_boundary(args):
    T = _load_tangle(args.file)
    vectors = sorted(oracle.brute_force_boundary(T, args.p))
    _emit(args, {"p": args.p, "size": len(vectors),
                 "vectors": [list(v) for v in vectors]})


# ---------------------------------------------------------------- parser

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")

    parser = argparse.ArgumentParser(
        prog="tanglecolor",
        description="Fox colorings of knot diagrams and n-string tangles.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    p = add("parse", cmd_parse, "validate a PD or tangle file and summarize it")
    p.add_argument("file")
    p = add("color", cmd_color, "count Fox p-colorings of a closed diagram")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("file")
    p = add("count", cmd_count, "count Z/m colorings via the Smith normal form")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("file")
    p = add("det", cmd_det, "determinant of a connected closed diagram")
    p.add_argument("file")
    p = add("primes", cmd_primes, "primes up to a bound admitting nontrivial colorings")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("file")
    p = add("boundary", cmd_boundary, "boundary-coloring space of a tangle")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("file")
    p = add("compare", cmd_compare, "compare the boundary spaces of two tangles")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("first")
    p.add_argument("second")
    p = add("build", cmd_build, "write the rational tangle of a Conway word")
    p.add_argument("word", nargs="+", help="Conway word, quoted or as separate entries")
    p.add_argument("-o", "--output")
    p = add("closure", cmd_closure, "numerator or denominator closure of a 2-string tangle")
    p.add_argument("--type", choices=["numerator", "denominator"], required=True)
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p = add("fraction", cmd_fraction, "continued-fraction value of a Conway word")
    p.add_argument("word", nargs="+", help="Conway word, quoted or as separate entries")

    p = sub.add_parser("oracle", help="brute-force spot checks")
    osub = p.add_subparsers(dest="oracle_command", required=True)
    q = osub.add_parser("count", parents=[common], help="enumerate Z/m colorings")
    q.add_argument("--m", type=int, required=True)
    q.add_argument("file")
    q.set_defaults(func=cmd_oracle_count)
    q = osub.add_parser("boundary", parents=[common], help="enumerate boundary colorings")
    q.add_argument("--p", type=int, required=True)
    q.add_argument("file")
    q.set_defaults(func=cmd_oracle_boundary)
    return parser


def _diagnose(kind, message):
    prefix = f"error[{kind}]:"
    mode = os.environ.get("TANGLECOLOR_COLOR", "auto")
    if mode == "auto" and sys.stderr.isatty():
        prefix = f"\x1b[31m{prefix}\x1b[0m"
    print(f"{prefix} {message}", file=sys.stderr)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        args.func(args)
    except ParseError as exc:
        _diagnose(exc.category, str(exc))
        return 2
    except _UsageError as exc:
        _diagnose("usage", str(exc))
        return 2
    except TangleColorError as exc:
        _diagnose(exc.category, str(exc))
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
