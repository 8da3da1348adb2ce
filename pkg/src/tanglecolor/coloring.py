"""Fox colorings of diagrams and boundary-coloring spaces of tangles.

At every crossing the coloring relation is

    2 * over - under_1 - under_2 = 0

with one unknown per arc.  Each free loop is an arc that meets no crossing
and so is an unconstrained unknown.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import linalg
from .diagram import (ArcPartition, Diagram, Tangle, arcs, connected_components,
                      numerator_closure)
from .errors import (ArityError, ArityMismatchError, DisconnectedError,
                     EmptyDiagramError, NotClosedError)
from .linalg import SubspaceModP, check_prime

__all__ = [
    "ColoringSystem",
    "ColoringReport",
    "BoundaryInvariant",
    "CompareVerdict",
    "ClosureIdentity",
    "coloring_system",
    "count_colorings",
    "count_colorings_mod_m",
    "determinant",
    "colorable_primes",
    "boundary_space",
    "compare_boundary",
    "closure_count_identity",
]


@dataclass(frozen=True)
class ColoringSystem:
    matrix: tuple              # one row per crossing, one column per arc
    arc_partition: ArcPartition
    boundary_arc_indices: tuple = ()

    @property
    def rows(self):
        return [list(r) for r in self.matrix]

    @property
    def cols(self) -> int:
        return self.arc_partition.arc_count


@dataclass(frozen=True)
class ColoringReport:
    p: int
    components: int
    nullity: int
    count: int
    nontrivial: bool

    def as_record(self):
        return {"p": self.p, "nullity": self.nullity, "count": str(self.count),
                "components": self.components, "nontrivial": self.nontrivial}


@dataclass(frozen=True)
class BoundaryInvariant:
    p: int
    n: int
    space: SubspaceModP

    @property
    def dim(self) -> int:
        return self.space.dim

    def as_record(self):
        return {"p": self.p, "n": self.n, "dim": self.dim,
                "rref": [list(r) for r in self.space.rref]}


@dataclass(frozen=True)
class CompareVerdict:
    verdict: str               # "Distinguished" or "Inconclusive"
    witness: Optional[tuple] = None

    @property
    def distinguished(self) -> bool:
        return self.verdict == "Distinguished"

    def as_record(self):
        witness = list(self.witness) if self.witness is not None else None
        return {"verdict": self.verdict, "witness": witness}


@dataclass(frozen=True)
class ClosureIdentity:
    p: int
    lhs: int
    rhs: int
    intersection_dim: int
    kernel_dim: int

    def as_record(self):
        return {"p": self.p, "lhs": str(self.lhs), "rhs": str(self.rhs),
                "intersection_dim": self.intersection_dim,
                "kernel_dim": self.kernel_dim, "equal": self.lhs == self.rhs}


def coloring_system(D) -> ColoringSystem:
    part = arcs(D)
    matrix = []
    for c in D.crossings:
        row = [0] * part.arc_count
        row[part.arc_of[c.over_a]] += 2
        row[part.arc_of[c.under_in]] -= 1
        row[part.arc_of[c.under_out]] -= 1
        matrix.append(tuple(row))
    boundary = tuple(part.arc_of[label] for label in D.boundary)
    return ColoringSystem(tuple(matrix), part, boundary)


def _require_closed(D):
    if not isinstance(D, Diagram):
        raise NotClosedError("a closed diagram is required, not a tangle")


def count_colorings(D: Diagram, p: int) -> ColoringReport:
    """Number of Fox p-colorings, i.e. ``p ** nullity``."""
    _require_closed(D)
    p = check_prime(p)
    system = coloring_system(D)
    nullity = linalg.nullspace_mod_p(system.matrix, p, system.cols).dim
    components = connected_components(D)
    return ColoringReport(p, components, nullity, p ** nullity, nullity > components)


def count_colorings_mod_m(D, m: int) -> int:
    """Number of Z/m colorings, from the Smith form of the coloring matrix."""
    system = coloring_system(D)
    factors = linalg.smith_normal_form(system.matrix)
    return linalg.count_null_mod_m(factors, system.cols, m)


def determinant(D: Diagram) -> int:
    """|det| of the coloring matrix with its last row and column removed.

    A single crossingless loop has determinant 1.  Diagrams whose minor is not
    square (a component that never passes under) have determinant 0.
    """
    _require_closed(D)
    if not D.crossings:
        if D.free_loops == 0:
            raise EmptyDiagramError("the empty diagram has no determinant")
        if D.free_loops == 1:
            return 1
    if connected_components(D) != 1:
        raise DisconnectedError("determinant needs a connected diagram")
    system = coloring_system(D)
    minor = [list(row[:-1]) for row in system.matrix[:-1]]
    if len(system.matrix) != system.cols:
        return 0
    return abs(linalg.determinant(minor))


def _primes_upto(bound: int):
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(bound ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(sieve[i * i::i]))
    return [i for i, flag in enumerate(sieve) if flag]


def colorable_primes(D: Diagram, bound: int) -> list:
    """Primes ``p <= bound`` for which D has a nontrivial p-coloring."""
    det = determinant(D)
    return [p for p in _primes_upto(bound) if det % p == 0]


def boundary_space(T: Tangle, p: int) -> BoundaryInvariant:
    """Restrictions of all p-colorings of T to its boundary points."""
    if not isinstance(T, Tangle):
        raise ArityError("boundary_space needs a tangle")
    p = check_prime(p)
    system = coloring_system(T)
    solutions = linalg.nullspace_mod_p(system.matrix, p, system.cols)
    restricted = [[v[a] for a in system.boundary_arc_indices] for v in solutions.rref]
    space = linalg.span_mod_p(restricted, p, len(T.boundary))
    return BoundaryInvariant(p, T.n, space)


def compare_boundary(T1: Tangle, T2: Tangle, p: int) -> CompareVerdict:
    if T1.n != T2.n:
        raise ArityMismatchError(f"tangles have n={T1.n} and n={T2.n}")
    s1 = boundary_space(T1, p).space
    s2 = boundary_space(T2, p).space
    if s1 == s2:
        return CompareVerdict("Inconclusive")
    for a, b in ((s1, s2), (s2, s1)):
        for row in a.rref:
            if row not in b:
                return CompareVerdict("Distinguished", tuple(row))
    raise AssertionError("distinct RREF bases with equal spans")


def closure_count_identity(T: Tangle, p: int) -> ClosureIdentity:
    """Both sides of: colorings of N(T) = boundary colorings with NW=NE, SW=SE,
    times the colorings that vanish on the boundary."""
    if not isinstance(T, Tangle) or T.n != 2:
        raise ArityError("closure_count_identity needs a 2-string tangle")
    p = check_prime(p)
    lhs = count_colorings(numerator_closure(T), p).count

    system = coloring_system(T)
    nullity = linalg.nullspace_mod_p(system.matrix, p, system.cols).dim
    space = boundary_space(T, p).space
    # coefficients c with sum c_i r_i satisfying x1 = x2 and x3 = x4
    constraints = [[r[0] - r[1] for r in space.rref], [r[2] - r[3] for r in space.rref]]
    intersection = linalg.nullspace_mod_p(constraints, p, space.dim).dim
    kernel = nullity - space.dim
    return ClosureIdentity(p, lhs, p ** intersection * p ** kernel, intersection, kernel)
