"""Univariate polynomials over an exact field.

Coefficients are stored constant term first with no trailing zeros; the zero
polynomial has an empty coefficient tuple and degree -1 (standing in for
minus infinity, so that "degree bound -1" means "must be zero").
"""

from __future__ import annotations

import itertools

from .fields import FieldElement, FieldError, FiniteField, QQ, prime_factors


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        cs = [field.coerce(c) for c in coeffs]
        while cs and field.is_zero(cs[-1]):
            cs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def _raw(cls, field, coeffs):
        # trusted constructor: coeffs are already field values
        cs = list(coeffs)
        while cs and field.is_zero(cs[-1]):
            cs.pop()
        obj = object.__new__(cls)
        object.__setattr__(obj, "field", field)
        object.__setattr__(obj, "coeffs", tuple(cs))
        return obj

    @classmethod
    def x(cls, field):
        return cls._raw(field, (field.zero, field.one))

    @classmethod
    def constant(cls, field, c):
        return cls._raw(field, (field.coerce(c),))

    @classmethod
    def monomial(cls, field, n, c=1):
        return cls._raw(field, (field.zero,) * n + (field.coerce(c),))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def lead(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def _check(self, other):
        if isinstance(other, Poly):
            if other.field != self.field:
                raise FieldError("polynomials over different fields")
            return other
        return Poly(self.field, [other])

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __add__(self, other):
        other = self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return Poly._raw(F, [F.add(a[i] if i < len(a) else F.zero, b[i] if i < len(b) else F.zero)
                             for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw(F, ())
        out = [F.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if F.is_zero(x):
                continue
            for j, y in enumerate(b):
                out[i + j] = F.add(out[i + j], F.mul(x, y))
        return Poly._raw(F, out)

    __rmul__ = __mul__

    def scale(self, c):
        F = self.field
        return Poly._raw(F, [F.mul(c, x) for x in self.coeffs])

    def __pow__(self, n):
        result = Poly._raw(self.field, (self.field.one,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        db = other.degree
        inv_lead = F.inv(other.lead())
        quo = [F.zero] * max(0, len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = F.mul(rem[k + db], inv_lead)
            quo[k] = c
            if not F.is_zero(c):
                for j, y in enumerate(other.coeffs):
                    rem[k + j] = F.sub(rem[k + j], F.mul(c, y))
        return Poly._raw(F, quo), Poly._raw(F, rem[:db] if db > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        """Quotient of an exact division; raises ``ValueError`` if a remainder is left."""
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError("division leaves a nonzero remainder")
        return q

    def __call__(self, value):
        """Horner evaluation at a field value, a FieldElement or a polynomial."""
        if isinstance(value, Poly):
            return poly_compose(self, value)
        F = self.field
        wrap = isinstance(value, FieldElement)
        v = F.coerce(value) if wrap else value
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, v), c)
        return FieldElement(F, acc) if wrap else acc

    def derivative(self):
        F = self.field
        return Poly._raw(F, [F.mul(F.from_int(i), c) for i, c in enumerate(self.coeffs)][1:])

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.lead()))

    def powmod(self, n, modulus):
        result = Poly._raw(self.field, (self.field.one,)) % modulus
        base = self % modulus
        while n:
            if n & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            n >>= 1
        return result

    def to_json(self):
        return [self.field.format(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, field, data):
        return cls._raw(field, [field.parse(c) for c in data])

    def __repr__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if self.field.is_zero(c):
                continue
            s = self.field.format(c)
            if isinstance(s, list):
                s = "(" + ",".join(s) + ")"
            if i == 0:
                terms.append(s)
            else:
                mon = "x" if i == 1 else f"x^{i}"
                terms.append(mon if c == self.field.one else f"{s}*{mon}")
        return " + ".join(reversed(terms))


def poly_compose(outer, inner):
    """``outer(inner(x))`` expanded; both polynomials over the same field."""
    if outer.field != inner.field:
        raise FieldError("field mismatch in composition")
    F = outer.field
    acc = Poly._raw(F, ())
    for c in reversed(outer.coeffs):
        acc = acc * inner + Poly._raw(F, (c,))
    return acc


def poly_gcd(a, b):
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def bareiss_det(matrix, field):
    """Determinant by fraction-free (Bareiss) elimination; divisions are exact."""
    n = len(matrix)
    if n == 0:
        return field.one
    M = [list(row) for row in matrix]
    sign = 1
    prev = field.one
    for k in range(n - 1):
        if field.is_zero(M[k][k]):
            swap = next((i for i in range(k + 1, n) if not field.is_zero(M[i][k])), None)
            if swap is None:
                return field.zero
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = field.sub(field.mul(M[i][j], M[k][k]), field.mul(M[i][k], M[k][j]))
                M[i][j] = field.div(num, prev)
        prev = M[k][k]
    det = M[n - 1][n - 1]
    return det if sign == 1 else field.neg(det)


def sylvester_matrix(f, g):
    m, n = f.degree, g.degree
    size = m + n
    F = f.field
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([F.zero] * i + fc + [F.zero] * (size - i - len(fc)))
    for i in range(m):
        rows.append([F.zero] * i + gc + [F.zero] * (size - i - len(gc)))
    return rows


def _resultant_value(f, g):
    F = f.field
    if f.is_zero():
        raise ValueError("resultant with the zero polynomial")
    if g.is_zero():
        return F.one if f.degree == 0 else F.zero
    if f.degree == 0:
        return F.pow(f.coeffs[0], g.degree)
    if g.degree == 0:
        return F.pow(g.coeffs[0], f.degree)
    if F == QQ:
        # clear denominators so elimination runs on integers
        from math import lcm
        cf = lcm(*(c.denominator for c in f.coeffs))
        cg = lcm(*(c.denominator for c in g.coeffs))
        fi = Poly._raw(F, [c * cf for c in f.coeffs])
        gi = Poly._raw(F, [c * cg for c in g.coeffs])
        det = bareiss_det(sylvester_matrix(fi, gi), F)
        return det / (F.pow(F.from_int(cf), g.degree) * F.pow(F.from_int(cg), f.degree))
    return bareiss_det(sylvester_matrix(f, g), F)


def poly_resultant(f, g):
    """Sylvester resultant ``Res(f, g)`` as a :class:`FieldElement`."""
    if f.field != g.field:
        raise FieldError("field mismatch in resultant")
    if f.is_zero():
        raise ValueError("resultant with the zero polynomial")
    return FieldElement(f.field, _resultant_value(f, g))


def is_separable(f):
    return f.degree >= 1 and not _resultant_value(f, f.derivative()) == f.field.zero


def is_irreducible(f):
    """Rabin's test over a finite field ``F_q``."""
    F = f.field
    if not isinstance(F, FiniteField):
        raise FieldError("irreducibility test implemented over finite fields only")
    m = f.degree
    if m < 1:
        return False
    if m == 1:
        return True
    f = f.monic()
    q = F.order
    x = Poly.x(F)
    if x.powmod(q ** m, f) != x % f:
        return False
    for ell in prime_factors(m):
        h = x.powmod(q ** (m // ell), f) - x
        if poly_gcd(f, h).degree != 0:
            return False
    return True


def monic_polys(field, m):
    """All monic degree-``m`` polynomials, lexicographic in (c_0, c_1, ...) with c_0 most significant."""
    elems = list(field.elements())
    for tail in itertools.product(elems, repeat=m):
        yield Poly._raw(field, tail + (field.one,))


def find_irreducible(p, m, field=None):
    """Lexicographically smallest monic irreducible polynomial of degree ``m``.

    Over ``F_p`` by default; pass ``field`` for a finite extension ``F_q``
    (elements ordered by their integer encoding).
    """
    from .fields import GF
    if m < 1:
        raise ValueError("degree must be positive")
    F = GF(p) if field is None else field
    for f in monic_polys(F, m):
        if is_irreducible(f):
            return f
    raise AssertionError("no irreducible polynomial found")  # cannot happen


def roots_in(f, field, embed=None):
    """Roots of ``f`` in a finite ``field`` by exhaustive evaluation.

    ``embed`` maps coefficients of ``f`` into ``field`` (identity by default).
    """
    if not field.is_finite():
        raise FieldError("exhaustive root search needs a finite field")
    coeffs = [embed(c) if embed else c for c in f.coeffs]
    out = []
    for a in field.elements():
        acc = field.zero
        for c in reversed(coeffs):
            acc = field.add(field.mul(acc, a), c)
        if field.is_zero(acc):
            out.append(a)
    return out
