"""
Checking the algebra by brute force
===================================

Every fast answer in the library has a slow twin that simply tries every
assignment of colors. On small inputs the two must agree exactly.
"""

import random

from tanglecolor import boundary_space, build_rational, count_colorings_mod_m, load_golden
from tanglecolor.linalg import span_mod_p
from tanglecolor.oracle import brute_force_boundary, brute_force_count

figure8 = load_golden("figure8.pd")
for m in range(2, 13):
    fast, slow = count_colorings_mod_m(figure8, m), brute_force_count(figure8, m)
    print(f"figure-eight mod {m:2d}: smith {fast:5d}  enumeration {slow:5d}")

###############################################################################
# Random rational tangles, compared as subspaces after row reduction.

rng = random.Random(4)
agree = 0
for _ in range(40):
    word = [rng.randint(-2, 2) or 1 for _ in range(rng.randint(1, 3))]
    T = build_rational(word)
    for p in (2, 3, 5):
        found = brute_force_boundary(T, p)
        agree += boundary_space(T, p).space == span_mod_p(sorted(found), p, 4)
print(f"{agree} of 120 boundary spaces match enumeration")
