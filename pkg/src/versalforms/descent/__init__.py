"""Group points over finite étale algebras, twisted actions and descended groups."""

from .groups import (ENUMERATION_LIMIT, PGL, SL, AutElement, DescentError, PointGroup, Product,
                     SizeError, Torus, UnsupportedError, flip_matrix, parse_spec, spec_from_json,
                     theta)
from .restriction import norm, restriction_matrix
from .ring import FiniteAlgebra, RingError
from .twist import (QuasiSplitReport, TwistSpec, alpha_from_generator, cohomologous_to_trivial,
                    embedded_base_points, induced_cocycle, inner_action, inner_cocycles,
                    inner_to_aut, is_quasi_split_twist, pinned_outer, preserves_pinning,
                    quasi_split_flag, standard_datum, trivial_alpha, twist_with,
                    twisted_fixed_points)


def finite_point_group(spec, p, k, m):
    """``G(E)`` for ``E = F_{q^m}`` over ``F_q`` (``q = p^k``) with Frobenius action."""
    from ..etale import construct_point_finite_field, fiber_algebra
    alg = fiber_algebra(construct_point_finite_field(p, k, m))
    return PointGroup(spec, FiniteAlgebra(alg))
