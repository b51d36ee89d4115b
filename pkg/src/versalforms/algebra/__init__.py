"""Exact arithmetic: fields, univariate polynomials, integer matrices."""

from .fields import (QQ, GF, Field, FieldElement, FieldError, FiniteField, Rationals,
                     field_from_descriptor, frobenius_power, is_prime)
from .extension import NumberField, embedding
from .intmatrix import (IntMatrix, hermite_normal_form, integer_kernel, lattice_basis,
                        smith_normal_form)
from .mpoly import MPoly, mpoly_det
from .poly import (Poly, find_irreducible, is_irreducible, is_separable, poly_compose,
                   poly_gcd, poly_resultant, roots_in)

__all__ = [
    "QQ", "GF", "Field", "FieldElement", "FieldError", "FiniteField", "Rationals",
    "field_from_descriptor", "frobenius_power", "is_prime", "NumberField", "embedding",
    "MPoly", "mpoly_det",
    "IntMatrix", "hermite_normal_form", "integer_kernel", "lattice_basis", "smith_normal_form",
    "Poly", "find_irreducible", "is_irreducible", "is_separable", "poly_compose", "poly_gcd",
    "poly_resultant", "roots_in",
]
