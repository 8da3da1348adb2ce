"""Fox colorings of knot diagrams and boundary-coloring spaces of tangles."""

from .coloring import (BoundaryInvariant, ColoringReport, CompareVerdict,
                       boundary_space, closure_count_identity, colorable_primes,
                       coloring_system, compare_boundary, count_colorings,
                       count_colorings_mod_m, determinant)
from .diagram import (INFINITY_TANGLE, ZERO_TANGLE, ConwayWord, Crossing, Diagram,
                      Tangle, TangleFraction, arcs, build_rational, canonical,
                      connected_components, denominator_closure, fraction, fraction_by_matrices, mirror,
                      numerator_closure, rotate90, tangle_add)
from .errors import *  # noqa: F401,F403
from .notation import (parse_any, parse_conway, parse_knot_pd, parse_tangle_file,
                       serialize_diagram, serialize_report, load_golden, golden_text)

__version__ = "0.1.0"
