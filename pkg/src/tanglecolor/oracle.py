"""Brute-force reference counts, for testing the linear-algebra route.

Every assignment of colors in Z/m to the arcs is checked directly against
the crossing relations.  Nothing here touches :mod:`tanglecolor.linalg`.
"""

import numpy as np

from .diagram import Tangle, arcs
from .errors import BadModulusError, TooLargeError

MAX_ARCS = 12
MAX_ASSIGNMENTS = 10**8
CHUNK = 1 << 18


def _relations(D):
    part = arcs(D)
    rel = np.array([(part.arc_of[c.over_a], part.arc_of[c.under_in],
                     part.arc_of[c.under_out]) for c in D.crossings],
                   dtype=np.int64).reshape(-1, 3)
    return part, rel


def _guard(arc_count, m):
    if m < 2:
        raise BadModulusError(f"modulus must be >= 2 (got {m})")
    if arc_count > MAX_ARCS or m ** arc_count > MAX_ASSIGNMENTS:
        raise TooLargeError(
            f"{m}^{arc_count} assignments exceed the enumeration limit")


def _satisfying(D, m):
    """Yield blocks of satisfying assignments, enumerated lexicographically."""
    part, rel = _relations(D)
    k = part.arc_count
    _guard(k, m)
    total = m ** k
    place = m ** np.arange(k - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, CHUNK):
        idx = np.arange(start, min(start + CHUNK, total), dtype=np.int64)
        colors = (idx[:, None] // place) % m
        ok = np.ones(len(idx), dtype=bool)
        for over, u1, u2 in rel:
            ok &= (2 * colors[:, over] - colors[:, u1] - colors[:, u2]) % m == 0
        yield part, colors[ok]


def brute_force_count(D, m: int) -> int:
    return sum(len(block) for _, block in _satisfying(D, int(m)))


def brute_force_boundary(T: Tangle, p: int) -> set:
    """Set of boundary color vectors over all colorings of T."""
    found = set()
    for part, block in _satisfying(T, int(p)):
        cols = [part.arc_of[label] for label in T.boundary]
        found.update(map(tuple, block[:, cols].tolist()))
    return found
