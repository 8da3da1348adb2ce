"""Text formats: PD files, tangle files, Conway words and JSON reports.

File grammar, one statement per line::

    X a b c d      crossing; (a, c) under-strand, (b, d) over-strand
    O              crossingless closed loop
    B e1 ... e2n   boundary labels, clockwise from NW (tangle files only)
    # ...          comment

Blank lines are ignored and ``#`` starts a comment anywhere on a line.
"""

from __future__ import annotations

import json
from collections import Counter
from importlib.resources import files

from .diagram import INFINITY_WORD, ConwayWord, Diagram, Tangle
from .errors import (EmptyWordError, LabelArityError, MissingBoundaryError,
                     NotationSyntaxError, OddBoundaryError)

__all__ = [
    "parse_knot_pd",
    "parse_tangle_file",
    "parse_any",
    "parse_conway",
    "serialize_diagram",
    "serialize_report",
    "ConwayWord",
    "INFINITY_WORD",
    "golden_text",
    "load_golden",
]


def _label(token: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise NotationSyntaxError(f"bad edge label {token!r}", lineno) from None
    if value < 1:
        raise NotationSyntaxError(f"edge label {value} must be positive", lineno)
    return value


def _statements(text: str):
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        tokens = line.split()
        if tokens:
            yield lineno, tokens


def _read(text: str, allow_boundary: bool):
    crossings, crossing_lines = [], []
    free_loops = 0
    boundary, boundary_line = None, None
    for lineno, tokens in _statements(text):
        head, args = tokens[0], tokens[1:]
        if head == "X":
            if len(args) != 4:
                raise NotationSyntaxError(
                    f"crossing needs 4 labels, got {len(args)}", lineno)
            crossings.append(tuple(_label(t, lineno) for t in args))
            crossing_lines.append(lineno)
        elif head == "O":
            if args:
                raise NotationSyntaxError("'O' takes no arguments", lineno)
            free_loops += 1
        elif head == "B":
            if not allow_boundary:
                raise NotationSyntaxError("'B' line in a closed-diagram file", lineno)
            if boundary is not None:
                raise NotationSyntaxError(
                    f"second 'B' line (first on line {boundary_line})", lineno)
            if not args:
                raise NotationSyntaxError("empty boundary", lineno)
            boundary = tuple(_label(t, lineno) for t in args)
            boundary_line = lineno
            if len(boundary) % 2:
                raise OddBoundaryError(
                    f"boundary has odd length {len(boundary)}", lineno)
        else:
            raise NotationSyntaxError(f"unknown statement {head!r}", lineno)

    # every label must be used exactly twice; report the line where it goes wrong
    seen = Counter()
    stream = [(ln, c) for ln, cs in zip(crossing_lines, crossings) for c in cs]
    if boundary is not None:
        stream += [(boundary_line, b) for b in boundary]
    for ln, label in stream:
        seen[label] += 1
        if seen[label] == 3:
            raise LabelArityError(f"edge label {label} occurs more than twice", ln)
    for ln, label in stream:
        if seen[label] == 1:
            raise LabelArityError(f"edge label {label} occurs only once", ln)
    return crossings, free_loops, boundary


def parse_knot_pd(text: str) -> Diagram:
    """Parse a closed-diagram PD file."""
    crossings, free_loops, _ = _read(text, allow_boundary=False)
    return Diagram(crossings, free_loops)


def parse_tangle_file(text: str) -> Tangle:
    """Parse a tangle file; exactly one ``B`` line is required."""
    crossings, free_loops, boundary = _read(text, allow_boundary=True)
    if boundary is None:
        raise MissingBoundaryError("tangle file has no 'B' line",
                                   max(1, len(text.splitlines())))
    return Tangle(crossings, boundary, free_loops)


def parse_any(text: str):
    """Parse a file as a tangle if it has a ``B`` line, else as a closed diagram."""
    crossings, free_loops, boundary = _read(text, allow_boundary=True)
    if boundary is None:
        return Diagram(crossings, free_loops)
    return Tangle(crossings, boundary, free_loops)


def parse_conway(text: str) -> ConwayWord:
    tokens = text.split()
    if not tokens:
        raise EmptyWordError("Conway word is empty", 1)
    if tokens == ["inf"]:
        return INFINITY_WORD
    entries = []
    for t in tokens:
        try:
            entries.append(int(t))
        except ValueError:
            raise NotationSyntaxError(f"bad Conway entry {t!r}", 1) from None
    if len(entries) > 1 and not any(entries):
        raise NotationSyntaxError("an all-zero word must be the single entry 0", 1)
    return ConwayWord(tuple(entries))


def serialize_diagram(D) -> str:
    """Inverse of :func:`parse_any`; tangles get a trailing ``B`` line."""
    lines = ["X " + " ".join(map(str, c)) for c in D.crossings]
    lines += ["O"] * D.free_loops
    if isinstance(D, Tangle):
        lines.append("B " + " ".join(map(str, D.boundary)))
    return "".join(line + "\n" for line in lines)


def serialize_report(report) -> str:
    """Compact JSON with a fixed key order.

    Report objects provide ``as_record()``, which already renders counts as
    decimal strings; plain mappings are dumped in insertion order.
    """
    if hasattr(report, "as_record"):
        report = report.as_record()
    return json.dumps(report, separators=(",", ":"), ensure_ascii=False)


def golden_text(name: str) -> str:
    """Contents of a golden example shipped with the package (e.g. ``"trefoil.pd"``)."""
    return files("tanglecolor").joinpath("golden", name).read_text(encoding="utf-8")


def load_golden(name: str):
    return parse_any(golden_text(name))
