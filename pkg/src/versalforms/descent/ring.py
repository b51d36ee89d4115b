"""Finite étale algebras ``E = F_q[z]/(f)`` as integer-coded rings.

An element ``sum c_k z^k`` (``c_k`` in ``F_q``, themselves int-coded) is the
integer ``sum c_k q^k``; constants of ``F_q`` keep their codes, so ``F_q``
sits inside ``E`` as ``range(q)``.  Addition and multiplication tables are
built for small rings.
"""

from __future__ import annotations

import itertools

from ..algebra.fields import FiniteField
from ..algebra.poly import Poly, poly_compose

TABLE_LIMIT = 729


class RingError(ValueError):
    pass


class FiniteAlgebra:
    def __init__(self, alg):
        F = alg.base
        if not isinstance(F, FiniteField):
            raise RingError("finite algebra needs a finite base field")
        self.alg = alg
        self.F = F
        self.q = F.order
        self.m = alg.dim
        self.order = self.q ** self.m
        self.f = alg.f
        self.gamma = alg.gamma
        self.zero = 0
        self.one = 1
        self._polys = None
        if self.order <= TABLE_LIMIT:
            self._build_tables()
        else:
            self._add = self._mul = None
        self._units = None
        self._sigma = [self._automorphism_table(g) for g in alg.gamma.elements] \
            if self.order <= 1 << 16 else None
        self.is_field = self._check_field()

    # coding

    def decode(self, a):
        cs = []
        for _ in range(self.m):
            a, r = divmod(a, self.q)
            cs.append(r)
        return cs

    def encode(self, cs):
        a = 0
        for c in reversed(list(cs) + [0] * (self.m - len(cs))):
            a = a * self.q + c
        return a

    def poly(self, a):
        return Poly._raw(self.F, self.decode(a))

    def from_poly(self, p):
        p = p % self.f
        return self.encode([p[k] for k in range(self.m)])

    def elements(self):
        return range(self.order)

    # arithmetic

    def _build_tables(self):
        n = self.order
        F = self.F
        dec = [self.decode(a) for a in range(n)]
        self._add = [[self.encode([F.add(x, y) for x, y in zip(dec[a], dec[b])])
                      for b in range(n)] for a in range(n)]
        self._mul = [[0] * n for _ in range(n)]
        for a in range(n):
            pa = Poly._raw(F, dec[a])
            for b in range(a, n):
                v = self.from_poly(pa * Poly._raw(F, dec[b]))
                self._mul[a][b] = self._mul[b][a] = v

    def add(self, a, b):
        if self._add is not None:
            return self._add[a][b]
        F = self.F
        return self.encode([F.add(x, y) for x, y in zip(self.decode(a), self.decode(b))])

    def neg(self, a):
        F = self.F
        return self.encode([F.neg(x) for x in self.decode(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self._mul is not None:
            return self._mul[a][b]
        return self.from_poly(self.poly(a) * self.poly(b))

    def pow(self, a, n):
        r = self.one
        while n:
            if n & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            n >>= 1
        return r

    def units(self):
        if self._units is None:
            if self._mul is not None:
                self._units = [a for a in range(self.order) if 1 in self._mul[a]]
            else:
                from ..algebra.poly import poly_gcd
                self._units = [a for a in range(1, self.order)
                               if poly_gcd(self.poly(a), self.f).degree == 0]
        return self._units

    def is_unit(self, a):
        if self._mul is not None:
            return 1 in self._mul[a]
        from ..algebra.poly import poly_gcd
        return a != 0 and poly_gcd(self.poly(a), self.f).degree == 0

    def inv(self, a):
        if self._mul is not None:
            try:
                return self._mul[a].index(1)
            except ValueError:
                raise ZeroDivisionError("not a unit") from None
        # extended Euclid in F_q[z]
        r0, r1 = self.f, self.poly(a)
        s0, s1 = Poly._raw(self.F, ()), Poly._raw(self.F, (self.F.one,))
        while not r1.is_zero():
            qt, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - qt * s1
        if r0.degree != 0:
            raise ZeroDivisionError("not a unit")
        return self.from_poly(s0.scale(self.F.inv(r0.coeffs[0])))

    def _check_field(self):
        from ..algebra.poly import is_irreducible
        return self.m == 1 or is_irreducible(self.f)

    # Galois action

    def _automorphism_table(self, g):
        h = self.alg.h[g]
        return [self.from_poly(poly_compose(self.poly(a), h)) for a in range(self.order)]

    def sigma(self, g, a):
        """The automorphism of ``g`` applied to ``a``."""
        if self._sigma is not None:
            return self._sigma[g][a]
        return self.from_poly(poly_compose(self.poly(a), self.alg.h[g]))

    def fixed_elements(self):
        gens = self.gamma.generators()
        return [a for a in range(self.order) if all(self.sigma(g, a) == a for g in gens)]

    def embed_base(self, c):
        """``F_q -> E`` (constants)."""
        return c

    def __repr__(self):
        return f"FiniteAlgebra(q={self.q}, m={self.m}, f={self.f})"


# square matrices over a FiniteAlgebra as flat row-major tuples


def mat_identity(R, n):
    return tuple(R.one if i == j else R.zero for i in range(n) for j in range(n))


def mat_mul(R, A, B, n):
    out = []
    for i in range(n):
        for j in range(n):
            acc = R.zero
            for k in range(n):
                a = A[i * n + k]
                if a:
                    b = B[k * n + j]
                    if b:
                        acc = R.add(acc, R.mul(a, b))
            out.append(acc)
    return tuple(out)


def mat_det(R, A, n):
    if n == 1:
        return A[0]
    if n == 2:
        return R.sub(R.mul(A[0], A[3]), R.mul(A[1], A[2]))
    acc = R.zero
    for j in range(n):
        a = A[j]
        if not a:
            continue
        minor = tuple(A[r * n + c] for r in range(1, n) for c in range(n) if c != j)
        t = R.mul(a, mat_det(R, minor, n - 1))
        acc = R.add(acc, t) if j % 2 == 0 else R.sub(acc, t)
    return acc


def mat_adjugate(R, A, n):
    if n == 1:
        return (R.one,)
    adj = [None] * (n * n)
    for i in range(n):
        for j in range(n):
            minor = tuple(A[r * n + c] for r in range(n) if r != i for c in range(n) if c != j)
            d = mat_det(R, minor, n - 1)
            adj[j * n + i] = d if (i + j) % 2 == 0 else R.neg(d)
    return tuple(adj)


def mat_inv(R, A, n):
    d = mat_det(R, A, n)
    dinv = R.inv(d)
    return tuple(R.mul(dinv, x) for x in mat_adjugate(R, A, n))


def mat_transpose(A, n):
    return tuple(A[j * n + i] for i in range(n) for j in range(n))


def mat_scale(R, c, A):
    return tuple(R.mul(c, x) for x in A)


def mat_apply(f, A):
    return tuple(f(x) for x in A)


def last_row_cofactors(R, rows, n):
    """Cofactors ``c_k`` with ``det = sum_k x_k c_k`` for last row ``x`` below ``rows``."""
    cof = []
    for k in range(n):
        minor = tuple(rows[r * n + c] for r in range(n - 1) for c in range(n) if c != k)
        d = mat_det(R, minor, n - 1) if n > 1 else R.one
        cof.append(d if (n - 1 + k) % 2 == 0 else R.neg(d))
    return cof


def matrices_with_det(R, n, accept):
    """All ``n x n`` matrices whose determinant satisfies ``accept`` (last-row expansion)."""
    E = list(R.elements())
    out = []
    for head in itertools.product(E, repeat=n * (n - 1)):
        cof = last_row_cofactors(R, head, n)
        nz = [k for k in range(n) if cof[k]]
        if not nz and not accept(R.zero):
            continue
        for last in itertools.product(E, repeat=n):
            d = R.zero
            for k in nz:
                x = last[k]
                if x:
                    d = R.add(d, R.mul(x, cof[k]))
            if accept(d):
                out.append(head + last)
    return out
