"""Diagram and tangle model, arc structure and tangle algebra.

A crossing is a quadruple ``(a, b, c, d)`` of edge labels listed
counterclockwise; ``(a, c)`` is the under-strand pair and ``(b, d)`` the
over-strand pair.  A :class:`Tangle` additionally carries its boundary edge
labels in clockwise order, starting at NW for 2-string tangles, so that the
four positions read ``(NW, NE, SE, SW)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Mapping, NamedTuple, Union

from .errors import (ArityError, EmptyWordError, LabelArityError,
                     NotationSyntaxError, OddBoundaryError)

__all__ = [
    "Crossing",
    "Diagram",
    "Tangle",
    "ArcPartition",
    "ConwayWord",
    "TangleFraction",
    "INFINITY_WORD",
    "arcs",
    "connected_components",
    "build_rational",
    "fraction",
    "fraction_by_matrices",
    "tangle_add",
    "rotate90",
    "mirror",
    "numerator_closure",
    "denominator_closure",
    "canonical",
    "ZERO_TANGLE",
    "INFINITY_TANGLE",
]

NW, NE, SE, SW = range(4)


class Crossing(NamedTuple):
    under_in: int
    over_a: int
    under_out: int
    over_b: int

    @property
    def under(self):
        return (self.under_in, self.under_out)

    @property
    def over(self):
        return (self.over_a, self.over_b)

    def mirrored(self) -> "Crossing":
        return Crossing(self.over_a, self.under_in, self.over_b, self.under_out)


def _as_crossings(crossings) -> tuple:
    out = []
    for c in crossings:
        c = tuple(int(x) for x in c)
        if len(c) != 4:
            raise NotationSyntaxError(f"crossing needs 4 labels, got {len(c)}")
        out.append(Crossing(*c))
    return tuple(out)


def _check_labels(labels: Iterable[int]) -> Counter:
    counts = Counter(labels)
    for label in counts:
        if label < 1:
            raise NotationSyntaxError(f"edge label {label} is not a positive integer")
    bad = sorted(label for label, k in counts.items() if k != 2)
    if bad:
        raise LabelArityError(
            f"edge label {bad[0]} occurs {counts[bad[0]]} times (expected 2)")
    return counts


@dataclass(frozen=True)
class Diagram:
    """Closed knot or link diagram: crossings plus crossingless loops."""

    crossings: tuple = ()
    free_loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "crossings", _as_crossings(self.crossings))
        if self.free_loops < 0:
            raise ValueError("free_loops must be nonnegative")
        _check_labels(label for c in self.crossings for label in c)

    @property
    def edges(self) -> frozenset:
        return frozenset(label for c in self.crossings for label in c)

    @property
    def boundary(self) -> tuple:
        return ()


@dataclass(frozen=True)
class Tangle:
    """Diagram in a disk meeting the boundary circle in ``len(boundary)`` points.

    A label listed twice in ``boundary`` is a crossingless strand.
    """

    crossings: tuple = ()
    boundary: tuple = ()
    free_loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "crossings", _as_crossings(self.crossings))
        object.__setattr__(self, "boundary", tuple(int(x) for x in self.boundary))
        if self.free_loops < 0:
            raise ValueError("free_loops must be nonnegative")
        if len(self.boundary) < 2:
            raise NotationSyntaxError("boundary needs at least 2 points")
        if len(self.boundary) % 2:
            raise OddBoundaryError(
                f"boundary has odd length {len(self.boundary)}")
        _check_labels([label for c in self.crossings for label in c]
                      + list(self.boundary))

    @property
    def n(self) -> int:
        return len(self.boundary) // 2

    @property
    def edges(self) -> frozenset:
        return frozenset(label for c in self.crossings for label in c) | set(self.boundary)


AnyDiagram = Union[Diagram, Tangle]

ZERO_TANGLE = Tangle(boundary=(1, 1, 2, 2))
INFINITY_TANGLE = Tangle(boundary=(1, 2, 2, 1))


class _UnionFind:
    """Disjoint sets of positive labels; the representative is the smallest member."""

    def __init__(self, items=()):
        self.parent = {}
        for x in items:
            self.parent.setdefault(x, x)

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return ra
        lo, hi = min(ra, rb), max(ra, rb)
        self.parent[hi] = lo
        return lo


# ---------------------------------------------------------------- arcs

@dataclass(frozen=True)
class ArcPartition:
    """Assignment of edge labels to arcs.

    Labelled arcs are numbered ``0..k-1`` by increasing smallest label; the
    free loops take the indices ``k..arc_count-1``.
    """

    arc_of: Mapping[int, int] = field(hash=False)
    arc_count: int
    free_loop_arcs: tuple = ()

    def members(self) -> list:
        groups = [[] for _ in range(self.arc_count)]
        for label in sorted(self.arc_of):
            groups[self.arc_of[label]].append(label)
        return groups


def arcs(D: AnyDiagram) -> ArcPartition:
    uf = _UnionFind(sorted(D.edges))
    for c in D.crossings:
        uf.union(c.over_a, c.over_b)
    roots = sorted({uf.find(label) for label in uf.parent})
    index = {root: i for i, root in enumerate(roots)}
    arc_of = {label: index[uf.find(label)] for label in sorted(uf.parent)}
    k = len(roots)
    loops = tuple(range(k, k + D.free_loops))
    return ArcPartition(arc_of, k + D.free_loops, loops)


def connected_components(D: AnyDiagram) -> int:
    """Number of connected pieces of the diagram (not of the link)."""
    part = arcs(D)
    uf = _UnionFind(range(1, part.arc_count + 1))
    for c in D.crossings:
        base = part.arc_of[c.over_a] + 1
        for label in c:
            uf.union(base, part.arc_of[label] + 1)
    return len({uf.find(i) for i in range(1, part.arc_count + 1)})


# ---------------------------------------------------------------- gluing

def _glue(crossings, boundary, free_loops, joins, keep):
    """Identify pairs of boundary positions, keeping the positions in ``keep``.

    Joined edges merge into one label (the smallest); a merged class with no
    endpoint left on a crossing or on the kept boundary is a crossingless
    closed loop.
    """
    uf = _UnionFind()
    for c in crossings:
        for label in c:
            uf.add(label)
    for label in boundary:
        uf.add(label)
    for i, j in joins:
        uf.union(boundary[i], boundary[j])
    new_crossings = tuple(Crossing(*(uf.find(x) for x in c)) for c in crossings)
    new_boundary = tuple(uf.find(boundary[i]) for i in keep)
    used = {x for c in new_crossings for x in c} | set(new_boundary)
    classes = {uf.find(x) for x in uf.parent}
    return new_crossings, new_boundary, free_loops + len(classes - used)


def _require_two_string(T: Tangle):
    if not isinstance(T, Tangle) or T.n != 2:
        n = T.n if isinstance(T, Tangle) else 0
        raise ArityError(f"a 2-string tangle is required (got n={n})")


def numerator_closure(T: Tangle) -> Diagram:
    """Join NW to NE and SW to SE."""
    _require_two_string(T)
    crossings, _, loops = _glue(T.crossings, T.boundary, T.free_loops,
                                [(NW, NE), (SW, SE)], [])
    return Diagram(crossings, loops)


def denominator_closure(T: Tangle) -> Diagram:
    """Join NW to SW and NE to SE."""
    _require_two_string(T)
    crossings, _, loops = _glue(T.crossings, T.boundary, T.free_loops,
                                [(NW, SW), (NE, SE)], [])
    return Diagram(crossings, loops)


def _shift_labels(T: Tangle, offset: int) -> Tangle:
    return Tangle([tuple(x + offset for x in c) for c in T.crossings],
                  [x + offset for x in T.boundary], T.free_loops)


def tangle_add(T1: Tangle, T2: Tangle) -> Tangle:
    """Horizontal sum: T1's east side glued to T2's west side."""
    _require_two_string(T1)
    _require_two_string(T2)
    T2 = _shift_labels(T2, max(T1.edges))
    boundary = T1.boundary + T2.boundary
    crossings, new_boundary, loops = _glue(
        T1.crossings + T2.crossings, boundary, T1.free_loops + T2.free_loops,
        [(NE, 4 + NW), (SE, 4 + SW)], [NW, 4 + NE, 4 + SE, SW])
    return Tangle(crossings, new_boundary, loops)


def rotate90(T: Tangle) -> Tangle:
    """Rotate the disk one boundary position clockwise (NW moves to NE)."""
    b = T.boundary
    return Tangle(T.crossings, b[-1:] + b[:-1], T.free_loops)


def mirror(D: AnyDiagram) -> AnyDiagram:
    crossings = tuple(c.mirrored() for c in D.crossings)
    if isinstance(D, Tangle):
        return Tangle(crossings, D.boundary, D.free_loops)
    return Diagram(crossings, D.free_loops)


# ---------------------------------------------------------------- canonical form

def _walk_order(D: AnyDiagram):
    """Edges and crossings in the order met when walking the strands.

    Strands are started from the boundary positions in order, then closed
    components from their smallest unvisited label.
    """
    ends = {}
    for k, c in enumerate(D.crossings):
        for s, label in enumerate(c):
            ends.setdefault(label, []).append(("c", k, s))
    for i, label in enumerate(D.boundary):
        ends.setdefault(label, []).append(("b", i))

    edge_order, crossing_order = [], []
    seen_edges, seen_crossings = set(), set()

    def walk(label, start):
        here = start
        while label not in seen_edges:
            seen_edges.add(label)
            edge_order.append(label)
            a, b = ends[label]
            there = b if a == here else a
            if there[0] == "b":
                return
            _, k, s = there
            if k not in seen_crossings:
                seen_crossings.add(k)
                crossing_order.append(k)
            here = ("c", k, (s + 2) % 4)
            label = D.crossings[k][here[2]]

    for i, label in enumerate(D.boundary):
        walk(label, ("b", i))
    for label in sorted(ends):
        if label not in seen_edges:
            walk(label, ends[label][0])
    return edge_order, crossing_order


def canonical(D: AnyDiagram) -> AnyDiagram:
    """Relabel edges ``1, 2, ...`` in strand-walk order.

    Crossings are listed in the order first met, each rotated to the
    lexicographically smaller of its two equivalent quadruples.  Two tangles
    that differ only by labelling have equal canonical forms.
    """
    edge_order, crossing_order = _walk_order(D)
    new = {label: i + 1 for i, label in enumerate(edge_order)}
    crossings = []
    for k in crossing_order:
        a, b, c, d = (new[x] for x in D.crossings[k])
        crossings.append(min((a, b, c, d), (c, d, a, b)))
    if isinstance(D, Tangle):
        return Tangle(crossings, [new[x] for x in D.boundary], D.free_loops)
    return Diagram(crossings, D.free_loops)


# ---------------------------------------------------------------- rational tangles

@dataclass(frozen=True)
class ConwayWord:
    """Twist word of a rational tangle, or the distinguished infinite word."""

    entries: tuple = ()
    infinite: bool = False

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        if self.infinite:
            if self.entries:
                raise NotationSyntaxError("the infinite word has no entries")
            return
        if not self.entries:
            raise EmptyWordError("Conway word is empty")
        if len(self.entries) > 1 and not any(self.entries):
            raise NotationSyntaxError("an all-zero word must be the single entry 0")

    def __str__(self):
        return "inf" if self.infinite else " ".join(map(str, self.entries))


INFINITY_WORD = ConwayWord(infinite=True)


def _as_word(word) -> ConwayWord:
    if isinstance(word, ConwayWord):
        return word
    return ConwayWord(tuple(word))


@dataclass(frozen=True)
class TangleFraction:
    """Reduced projective rational; infinity is ``1/0``."""

    numerator: int
    denominator: int

    def __post_init__(self):
        num, den = self.numerator, self.denominator
        if num == 0 and den == 0:
            raise ZeroDivisionError("0/0 is not a projective rational")
        g = gcd(num, den)
        num, den = num // g, den // g
        if den < 0 or (den == 0 and num < 0):
            num, den = -num, -den
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    @property
    def is_infinite(self) -> bool:
        return self.denominator == 0

    def __str__(self):
        if self.is_infinite:
            return "inf"
        return f"{self.numerator}/{self.denominator}"


def fraction(word) -> TangleFraction:
    """Continued fraction ``a_k + 1/(a_{k-1} + ... + 1/a_1)`` of a twist word."""
    word = _as_word(word)
    if word.infinite:
        return TangleFraction(1, 0)
    num, den = word.entries[0], 1
    for a in word.entries[1:]:
        if num == 0:
            num, den = 1, 0           # 1/0 = inf
        elif den == 0:
            num, den = a, 1           # a + 1/inf = a
        else:
            num, den = a * num + den, num
    return TangleFraction(num, den)


def fraction_by_matrices(word) -> TangleFraction:
    """Same value as :func:`fraction`, via products of ``[[a, 1], [1, 0]]``."""
    word = _as_word(word)
    if word.infinite:
        return TangleFraction(1, 0)
    m = ((1, 0), (0, 1))
    for a in word.entries:
        (p, q), (r, s) = m
        m = ((a * p + r, a * q + s), (p, q))
    return TangleFraction(m[0][0], m[1][0])


def _twist(state, horizontal: bool, positive: bool):
    """Add one crossing at the east side (horizontal) or south side (vertical)."""
    crossings, b, nxt = state
    n1, n2 = nxt, nxt + 1
    if horizontal:
        e_ne, e_se = b[NE], b[SE]
        if positive:
            crossings.append((e_se, n2, n1, e_ne))
        else:
            crossings.append((e_ne, e_se, n2, n1))
        b = (b[NW], n1, n2, b[SW])
    else:
        e_sw, e_se = b[SW], b[SE]
        if positive:
            crossings.append((e_se, e_sw, n1, n2))
        else:
            crossings.append((e_sw, n1, n2, e_se))
        b = (b[NW], b[NE], n2, n1)
    return crossings, b, nxt + 2


def build_rational(word) -> Tangle:
    """Rational tangle of a twist word.

    Blocks alternate between vertical twists at the bottom and horizontal
    twists at the right.  The last entry is always a vertical block, so the
    first entry is vertical for odd-length words (built on the tangle with
    boundary ``1 2 2 1``) and horizontal for even-length words (built on
    ``1 1 2 2``).  A positive twist puts the NW-to-SE strand on top, exactly
    as in the single-crossing tangle ``[1]``.

    With these conventions the denominator closure has determinant
    ``|numerator|`` of :func:`fraction` and the numerator closure has
    determinant ``|denominator|``.  Labels are then reassigned by
    :func:`canonical`.
    """
    word = _as_word(word)
    if word.infinite:
        return canonical(ZERO_TANGLE)
    entries = word.entries
    k = len(entries)
    base = ZERO_TANGLE if k % 2 == 0 else INFINITY_TANGLE
    state = ([], base.boundary, 3)
    for i, a in enumerate(entries):
        horizontal = (k - 1 - i) % 2 == 1
        for _ in range(abs(a)):
            state = _twist(state, horizontal, a > 0)
    crossings, boundary, _ = state
    return canonical(Tangle(crossings, boundary))
