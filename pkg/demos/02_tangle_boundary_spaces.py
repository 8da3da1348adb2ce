"""
Boundary colorings of tangles
=============================

A tangle has loose ends on the boundary of a disk. Restricting every coloring
to those ends gives a subspace of GF(p)^(2n), stored by its reduced row
echelon basis so that two tangles can be compared directly.
"""

from tanglecolor import (INFINITY_TANGLE, ZERO_TANGLE, boundary_space, compare_boundary,
                         parse_tangle_file, rotate90)

# Boundary points are listed clockwise starting at the north-west corner.
plus_one = parse_tangle_file("X 2 1 4 3\nB 1 2 3 4")

###############################################################################
# The 0-tangle joins NW to NE and SW to SE; the infinity tangle joins them
# vertically. Their spaces are spanned by the obvious indicator vectors.

for name, T in (("0", ZERO_TANGLE), ("inf", INFINITY_TANGLE), ("+1", plus_one)):
    inv = boundary_space(T, 5)
    print(f"{name:>3s} at p=5: dim {inv.dim}, basis {list(inv.space.rref)}")

###############################################################################
# A single crossing forces x3 = x1 and x4 = 2*x1 - x2. Every 2-string space
# satisfies x1 - x2 + x3 - x4 = 0, which is easy to check on this one.

for vector in boundary_space(plus_one, 5).space.rref:
    x1, x2, x3, x4 = vector
    print(vector, "alternating sum", (x1 - x2 + x3 - x4) % 5)

###############################################################################
# Unequal spaces prove the tangles differ, and the verdict carries a witness.

verdict = compare_boundary(ZERO_TANGLE, INFINITY_TANGLE, 2)
print(verdict.verdict, verdict.witness)

###############################################################################
# Turning the disk a quarter turn just relabels the boundary positions.

print(boundary_space(rotate90(plus_one), 5).space.rref)
