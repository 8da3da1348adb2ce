"""
Rational tangles and their closures
===================================

Twisting two strands alternately sideways and downward gives a rational
tangle. Its continued-fraction value predicts the determinants of its two
closures, and that prediction can be checked against the colorings.
"""

from tanglecolor import (build_rational, closure_count_identity, count_colorings,
                         denominator_closure, determinant, fraction,
                         fraction_by_matrices, numerator_closure, parse_conway,
                         serialize_diagram)

word = parse_conway("2 3 4")
T = build_rational(word)
print(f"word {word.entries} has fraction {fraction(word)} "
      f"(matrix route: {fraction_by_matrices(word)})")
print(serialize_diagram(T))

###############################################################################
# For a fraction a/b the denominator closure has determinant |a| and the
# numerator closure |b|. Here that is 30 and 7.

print("D closure determinant", determinant(denominator_closure(T)))
print("N closure determinant", determinant(numerator_closure(T)))

###############################################################################
# Three twists closed up give back the trefoil.

trefoil = denominator_closure(build_rational([3]))
print("D([3]) at p=3:", count_colorings(trefoil, 3).count, "colorings")

###############################################################################
# Colorings of a closure are exactly the boundary colorings that agree across
# the joined ends, counted with their fibres. Both sides of that identity are
# computed independently.

for w in ([3], [1, 2], [2, -1, 2], [0, 4]):
    ident = closure_count_identity(build_rational(w), 3)
    print(f"{str(w):12s} lhs {ident.lhs:4d}  rhs {ident.rhs:4d}")
