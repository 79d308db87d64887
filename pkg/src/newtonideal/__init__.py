"""Newton polyhedra, minimal reductions, integral closures and fiber rings
of monomial ideals, computed in exact rational arithmetic."""

from .closure import (
    check_closure_identity,
    integral_closure,
    is_integrally_closed,
    normality_certificate,
)
from .fiber import (
    analytic_spread,
    fiber_hilbert_actual,
    fiber_hilbert_reduced,
    fiber_report,
    is_fiber_domain,
    is_persistent_generator,
    minimal_primes,
    reducedness_verdict,
)
from .ideal import MonomialIdeal, minimalize, multiply, parse, power, radical
from .newton import (
    c_invariant,
    compact_faces,
    extreme_points,
    maximal_compact_faces,
    membership,
    scale_face,
)
from .reduction import (
    bracket_power,
    is_extremal,
    is_reduction,
    kodiyalam_slope,
    minimal_monomial_reduction,
    reduction_number,
)

__version__ = "0.1.0"
