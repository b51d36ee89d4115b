"""Restriction of scalars at points: ``GL_n(E) -> GL_{nm}(F)`` by the regular representation."""

from __future__ import annotations

from ..algebra.fields import GF, FiniteField
from ..algebra.linalg import det
from ..algebra.poly import Poly
from .groups import DescentError
from .ring import FiniteAlgebra


class _Basis:
    """Regular representation on the basis ``1, z, ..., z^{m-1}``."""

    def __init__(self, algebra):
        self.algebra = algebra
        if isinstance(algebra, FiniteAlgebra):
            self.base, self.m = algebra.F, algebra.m
            self.coords = lambda a: algebra.decode(a)
            self.mul = algebra.mul
            self.z_power = lambda k: algebra.from_poly(Poly.x(algebra.F) ** k)
        elif isinstance(algebra, FiniteField):
            self.base, self.m = GF(algebra.p), algebra.degree
            self.coords = lambda a: list(algebra.coeffs(a))
            self.mul = algebra.mul
            self.z_power = lambda k: algebra.from_coeffs([0] * k + [1])
        else:  # EtaleAlgebra with Poly entries
            self.base, self.m = algebra.base, algebra.dim
            self.coords = lambda a: [a[k] for k in range(self.m)]
            self.mul = algebra.mul
            self.z_power = lambda k: Poly.x(algebra.base) ** k % algebra.f

    def regular(self, a):
        """Row ``k`` holds the coordinates of ``a * z^k``."""
        return [self.coords(self.mul(a, self.z_power(k))) for k in range(self.m)]


def restriction_matrix(x, algebra):
    """Block matrix over ``F`` of the ``n x n`` matrix ``x`` (a list of rows) over ``E``."""
    B = _Basis(algebra)
    n = len(x)
    if any(len(row) != n for row in x):
        raise DescentError("x must be square")
    m = B.m
    out = [[None] * (n * m) for _ in range(n * m)]
    for i in range(n):
        for j in range(n):
            blk = B.regular(x[i][j])
            for r in range(m):
                for c in range(m):
                    out[i * m + r][j * m + c] = blk[r][c]
    if B.base.is_zero(det(out, B.base)):
        raise DescentError("x is not invertible")
    return out


def norm(a, algebra):
    """``N_{E/F}(a)`` as the determinant of the regular representation."""
    B = _Basis(algebra)
    return det(B.regular(a), B.base)


def base_field(algebra):
    return _Basis(algebra).base
