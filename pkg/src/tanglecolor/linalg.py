"""Exact linear algebra over GF(p) and the integers.

Matrices are lists of rows of Python ints (anything convertible with
``int`` is accepted, including numpy integer arrays).  Nothing here uses
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod
from typing import List, Tuple

from .errors import BadModulusError, NotPrimeError

Matrix = List[List[int]]

PRIME_LIMIT = 2**31

__all__ = [
    "is_prime",
    "check_prime",
    "rref_mod_p",
    "nullspace_mod_p",
    "span_mod_p",
    "SubspaceModP",
    "InvariantFactors",
    "smith_normal_form",
    "count_null_mod_m",
    "determinant",
]


def _as_matrix(M) -> Matrix:
    if hasattr(M, "tolist"):
        M = M.tolist()
    return [[int(x) for x in row] for row in M]


def _width(M: Matrix, cols=None) -> int:
    if cols is not None:
        return cols
    return len(M[0]) if M else 0


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for ``n < 3.4e14``."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def check_prime(p) -> int:
    if isinstance(p, bool) or int(p) != p:
        raise NotPrimeError(f"p must be prime (got {p!r})")
    p = int(p)
    if p >= PRIME_LIMIT:
        raise NotPrimeError(f"p must be a prime below 2^31 (got {p})")
    if not is_prime(p):
        raise NotPrimeError(f"p must be prime (got {p})")
    return p


def _rref_in_place(A: Matrix, p: int) -> List[int]:
    """Gauss-Jordan over GF(p); returns pivot columns.  ``A`` holds residues."""
    rows = len(A)
    cols = _width(A)
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot = next((i for i in range(r, rows) if A[i][c]), None)
        if pivot is None:
            continue
        A[r], A[pivot] = A[pivot], A[r]
        inv = pow(A[r][c], -1, p)
        A[r] = [x * inv % p for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [(x - f * y) % p for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return pivots


def rref_mod_p(M, p) -> Tuple[Matrix, int]:
    """Reduced row echelon form of ``M`` over GF(p), and its rank.

    The returned matrix has the shape of ``M`` with zero rows at the bottom.
    """
    p = check_prime(p)
    A = [[x % p for x in row] for row in _as_matrix(M)]
    pivots = _rref_in_place(A, p)
    return A, len(pivots)


@dataclass(frozen=True)
class SubspaceModP:
    """Subspace of GF(p)^ambient_dim stored as its (unique) RREF basis."""

    p: int
    ambient_dim: int
    rref: tuple

    @property
    def dim(self) -> int:
        return len(self.rref)

    def __len__(self):
        return self.p ** self.dim

    def contains(self, v) -> bool:
        v = [int(x) % self.p for x in v]
        if len(v) != self.ambient_dim:
            raise ValueError("vector has the wrong length")
        for row in self.rref:
            c = next(j for j, x in enumerate(row) if x)
            if v[c]:
                f = v[c]
                v = [(x - f * y) % self.p for x, y in zip(v, row)]
        return not any(v)

    __contains__ = contains

    def as_record(self) -> dict:
        return {"p": self.p, "dim": self.dim, "rref": [list(r) for r in self.rref]}


def span_mod_p(vectors, p, ambient_dim: int) -> SubspaceModP:
    """Canonical form of the span of ``vectors`` in GF(p)^ambient_dim."""
    p = check_prime(p)
    A = [[int(x) % p for x in v] for v in vectors]
    if any(len(v) != ambient_dim for v in A):
        raise ValueError("vector has the wrong length")
    pivots = _rref_in_place(A, p)
    return SubspaceModP(p, ambient_dim, tuple(tuple(r) for r in A[:len(pivots)]))


def nullspace_mod_p(M, p, cols: int | None = None) -> SubspaceModP:
    """Solutions of ``M x = 0`` over GF(p).

    ``cols`` gives the column count when ``M`` has no rows.
    """
    p = check_prime(p)
    A = [[x % p for x in row] for row in _as_matrix(M)]
    n = _width(A, cols)
    pivots = _rref_in_place(A, p)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for r, c in enumerate(pivots):
            v[c] = -A[r][f] % p
        basis.append(v)
    return span_mod_p(basis, p, n)


# ---------------------------------------------------------------- integers

@dataclass(frozen=True)
class InvariantFactors:
    """Nonzero Smith invariant factors ``d_1 | d_2 | ... | d_rank``."""

    factors: tuple

    @property
    def rank(self) -> int:
        return len(self.factors)


def smith_normal_form(M) -> InvariantFactors:
    """Invariant factors of an integer matrix.

    Each step moves the nonzero entry of smallest absolute value (first in
    row-major order among ties) to the pivot, reduces its row and column by
    division with remainder, and repeats until the pivot divides everything
    in the remaining block.
    """
    A = _as_matrix(M)
    rows, cols = len(A), _width(A)
    diag = []
    t = 0
    while t < min(rows, cols):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = A[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        _, i, j = best
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]

        d = A[t][t]
        dirty = False
        for i in range(t + 1, rows):
            q = A[i][t] // d
            if q:
                A[i] = [x - q * y for x, y in zip(A[i], A[t])]
            dirty |= A[i][t] != 0
        for j in range(t + 1, cols):
            q = A[t][j] // d
            if q:
                for row in A:
                    row[j] -= q * row[t]
            dirty |= A[t][j] != 0
        if dirty:
            continue  # a remainder is now smaller than the pivot
        bad = next((i for i in range(t + 1, rows)
                    if any(A[i][j] % d for j in range(t + 1, cols))), None)
        if bad is not None:
            A[t] = [x + y for x, y in zip(A[t], A[bad])]
            continue
        diag.append(abs(d))
        t += 1
    return InvariantFactors(tuple(diag))


def count_null_mod_m(f: InvariantFactors, cols: int, m: int) -> int:
    """Number of ``x`` in (Z/m)^cols with ``M x = 0 (mod m)``."""
    if isinstance(m, bool) or int(m) != m or m < 2:
        raise BadModulusError(f"modulus must be an integer >= 2 (got {m!r})")
    if m >= PRIME_LIMIT:
        raise BadModulusError(f"modulus must be below 2^31 (got {m})")
    m = int(m)
    return prod(gcd(d, m) for d in f.factors) * m ** (cols - f.rank)


def determinant(M) -> int:
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    A = _as_matrix(M)
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("matrix is not square")
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1] if n else 1
