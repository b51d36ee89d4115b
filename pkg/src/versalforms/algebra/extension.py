"""Simple algebraic extensions ``Q[t]/(g)`` of the rationals.

Used as splitting targets for étale algebras over ``Q``.  Irreducibility of
``g`` is the caller's responsibility; inverting a zero divisor raises.
"""

from __future__ import annotations

from fractions import Fraction

from .fields import QQ, Field, FieldElement, FieldError


class NumberField(Field):
    kind = "number_field"
    characteristic = 0

    def __init__(self, modulus):
        mod = [Fraction(c) for c in modulus]
        if len(mod) < 2 or mod[-1] != 1:
            raise FieldError("modulus must be monic of degree >= 1")
        self.modulus = tuple(mod)
        self.degree = len(mod) - 1
        self.zero = (Fraction(0),) * self.degree
        self.one = (Fraction(1),) + (Fraction(0),) * (self.degree - 1)

    def coerce(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldError("element belongs to a different field")
            return value.value
        if isinstance(value, (list, tuple)):
            v = [Fraction(c) for c in value]
            if len(v) > self.degree:
                raise FieldError("coefficient vector too long")
            return tuple(v + [Fraction(0)] * (self.degree - len(v)))
        if isinstance(value, float):
            raise TypeError("floating point input is not accepted")
        return (Fraction(value),) + (Fraction(0),) * (self.degree - 1)

    def from_int(self, n):
        return self.coerce(n)

    def generator(self):
        return self.coerce([0, 1]) if self.degree > 1 else (-self.modulus[0],)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def _reduce(self, coeffs):
        c = list(coeffs)
        n = self.degree
        for k in range(len(c) - 1, n - 1, -1):
            lead = c[k]
            if lead:
                for j in range(n + 1):
                    c[k - n + j] -= lead * self.modulus[j]
        c = c[:n] + [Fraction(0)] * max(0, n - len(c))
        return tuple(c)

    def mul(self, a, b):
        out = [Fraction(0)] * (2 * self.degree - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return self._reduce(out)

    def inv(self, a):
        from .poly import Poly
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        # extended Euclid in Q[t]
        r0, r1 = Poly(QQ, self.modulus), Poly(QQ, a)
        s0, s1 = Poly(QQ, []), Poly(QQ, [1])
        while not r1.is_zero():
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        if r0.degree != 0:
            raise ZeroDivisionError("element is a zero divisor (modulus reducible)")
        inv = s0.scale(1 / r0.coeffs[0])
        return self.coerce(list(inv.coeffs))

    def format(self, a):
        return [str(c) for c in a]

    def parse(self, obj):
        return self.coerce([Fraction(c) for c in obj] if isinstance(obj, list) else obj)

    def descriptor(self):
        return {"kind": "number_field", "modulus": [str(c) for c in self.modulus]}

    def __repr__(self):
        return f"NumberField({[str(c) for c in self.modulus]})"

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(("NF", self.modulus))


def embedding(base, ext):
    """Field embedding ``base -> ext`` as a function on raw values.

    Prime fields and ``Q`` embed canonically.  For a finite extension of
    ``F_p`` the smallest root (by integer encoding) of its modulus in ``ext``
    is chosen as the image of the generator.
    """
    from .fields import FiniteField
    if base == ext:
        return lambda a: a
    if base == QQ:
        if isinstance(ext, NumberField) or ext == QQ:
            return ext.coerce
        raise FieldError("no embedding of Q into a finite field")
    if isinstance(base, FiniteField):
        if not isinstance(ext, FiniteField) or ext.p != base.p:
            raise FieldError("characteristic mismatch")
        if base.degree == 1:
            return lambda a: a
        if ext.degree % base.degree:
            raise FieldError(f"F_{base.order} does not embed in F_{ext.order}")
        mod = base.modulus
        root = None
        for r in ext.elements():
            acc = ext.zero
            for c in reversed(mod):
                acc = ext.add(ext.mul(acc, r), c)
            if acc == ext.zero:
                root = r
                break
        powers = [ext.one]
        for _ in range(base.degree - 1):
            powers.append(ext.mul(powers[-1], root))

        def emb(a, powers=powers):
            acc = ext.zero
            for c, pw in zip(base.coeffs(a), powers):
                if c:
                    acc = ext.add(acc, ext.mul(c, pw))
            return acc
        return emb
    raise FieldError(f"no embedding from {base!r} to {ext!r}")
