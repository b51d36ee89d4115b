"""Étale-algebra family points, fiber algebras and symbolic presentations."""

from .algebra import EtaleAlgebra, TensorSplit, fiber_algebra, invariant_subalgebra, tensor_split
from .family import (FamilyError, FamilyPoint, FamilyReport, complete_point,
                     construct_point_finite_field, construct_point_rational, cyclotomic_point,
                     cyclotomic_polynomial, degree_bounds, verify_family_point)
from .presentation import Presentation, emit_presentation, expected_counts, point_values
