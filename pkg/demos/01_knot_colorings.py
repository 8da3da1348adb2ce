"""
Counting Fox colorings of small knots
=====================================

A p-coloring labels every arc of a diagram with a residue mod p so that at
each crossing twice the over-arc equals the sum of the two under-arcs.
Constant labelings always work; the interesting question is when others do.
"""

from tanglecolor import (colorable_primes, count_colorings, count_colorings_mod_m,
                         determinant, load_golden)

###############################################################################
# The trefoil has three arcs and three crossings. Mod 3 the relation
# 2a = b + c says the three colors are all equal or all different, so there
# are 3 constant colorings and 6 more.

trefoil = load_golden("trefoil.pd")
for p in (2, 3, 5, 7):
    report = count_colorings(trefoil, p)
    print(f"trefoil  p={p}: nullity {report.nullity}, count {report.count}, "
          f"nontrivial {report.nontrivial}")

###############################################################################
# Which primes work is controlled by a single integer. Drop one row and one
# column from the coloring matrix and take the absolute determinant.

for name in ("trefoil.pd", "figure8.pd", "hopf.pd", "unknot.pd"):
    D = load_golden(name)
    print(f"{name:12s} determinant {determinant(D):2d}, "
          f"colorable primes below 30: {colorable_primes(D, 30)}")

###############################################################################
# Composite moduli are not fields, so the count need not be a power of m.
# The Smith normal form of the coloring matrix gives it anyway.

for m in (4, 6, 9, 12):
    print(f"trefoil mod {m:2d}: {count_colorings_mod_m(trefoil, m)} colorings")
