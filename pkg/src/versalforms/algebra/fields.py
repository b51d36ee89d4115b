"""Exact fields: the rationals, prime fields and flattened extensions of prime fields.

Field elements are plain Python values owned by a field object:

* ``Rationals``: :class:`fractions.Fraction`
* ``FiniteField``: an ``int`` in ``range(q)`` whose base-``p`` digits are the
  coefficients (constant first) of the element as a polynomial in the
  generator ``t`` of ``F_p[t]/(modulus)``.

With this encoding the prime subfield is ``range(p)`` inside every extension,
so constants embed without conversion.  :class:`FieldElement` wraps a value
together with its field for operator-style use.
"""

from __future__ import annotations

import functools
from fractions import Fraction


class FieldError(ValueError):
    pass


def is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class Field:
    """Common interface; subclasses implement the arithmetic on raw values."""

    kind = None
    characteristic = None
    order = None  # None for infinite fields

    zero = None
    one = None

    def __call__(self, value):
        return FieldElement(self, self.coerce(value))

    def is_zero(self, a):
        return a == self.zero

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        if n < 0:
            a, n = self.inv(a), -n
        result = self.one
        while n:
            if n & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            n >>= 1
        return result

    def sum(self, values):
        acc = self.zero
        for v in values:
            acc = self.add(acc, v)
        return acc

    def is_finite(self):
        return self.order is not None


class Rationals(Field):
    kind = "rationals"
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldError("element belongs to a different field")
            return value.value
        if isinstance(value, str):
            return Fraction(value)
        if isinstance(value, float):
            raise TypeError("floating point input is not accepted")
        return Fraction(value)

    def from_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b

    def format(self, a):
        return str(a)

    def parse(self, obj):
        return Fraction(obj) if isinstance(obj, (str, int)) else self.coerce(obj)

    def descriptor(self):
        return {"kind": "rationals"}

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def __reduce__(self):
        return (Rationals, ())


QQ = Rationals()

# above this size no addition/multiplication tables are built
_TABLE_LIMIT = 1 << 16


def _polymulmod(a, b, modulus, p):
    """Digit vectors (constant first) multiplied modulo a monic modulus."""
    m = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(len(prod) - 1, m - 1, -1):
        c = prod[k]
        if c:
            for j in range(m + 1):
                prod[k - m + j] = (prod[k - m + j] - c * modulus[j]) % p
    prod = prod[:m] + [0] * max(0, m - len(prod))
    return prod


class FiniteField(Field):
    """``F_p`` (``modulus is None``) or ``F_p[t]/(modulus)`` for a monic irreducible modulus."""

    def __init__(self, p, modulus=None):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        if modulus is None or len(modulus) == 2:
            # a degree-one modulus still describes F_p; keep the descriptor honest
            self.modulus = None if modulus is None else tuple(int(c) % p for c in modulus)
            self.degree = 1
        else:
            mod = tuple(int(c) % p for c in modulus)
            if mod[-1] != 1:
                raise FieldError("modulus must be monic")
            self.modulus = mod
            self.degree = len(mod) - 1
        self.order = p ** self.degree
        self.zero = 0
        self.one = 1
        self.kind = "prime" if self.modulus is None else "extension"
        if self.modulus is not None and self.degree > 1:
            from .poly import Poly, is_irreducible
            if not is_irreducible(Poly(GF(p), self.modulus)):
                raise FieldError(f"modulus {list(self.modulus)} is reducible over F_{p}")
        if self.modulus is not None and self.degree == 1 and self.modulus[-1] != 1:
            raise FieldError("modulus must be monic")
        self._build_tables()

    def _build_tables(self):
        q = self.order
        if self.degree == 1:
            self._log = self._exp = None
            self._digits = None
            return
        self._digits = [self._to_digits(a) for a in range(q)] if q <= _TABLE_LIMIT else None
        if q > _TABLE_LIMIT:
            self._log = self._exp = None
            return
        # find a primitive element and build exp/log tables
        for g in range(2, q):
            exp = [1]
            x = 1
            for _ in range(q - 2):
                x = self._slow_mul(x, g)
                if x == 1:
                    break
                exp.append(x)
            if len(exp) == q - 1:
                break
        log = [None] * q
        for i, v in enumerate(exp):
            log[v] = i
        self._exp = exp + exp
        self._log = log
        self.primitive_element = exp[1] if q > 2 else 1

    def _to_digits(self, a):
        d = []
        for _ in range(self.degree):
            a, r = divmod(a, self.p)
            d.append(r)
        return d

    def _from_digits(self, d):
        a = 0
        for c in reversed(d):
            a = a * self.p + c
        return a

    def _slow_mul(self, a, b):
        return self._from_digits(_polymulmod(self._to_digits(a), self._to_digits(b),
                                             self.modulus, self.p))

    # coercion and serialization

    def coerce(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldError("element belongs to a different field")
            return value.value
        if isinstance(value, (list, tuple)):
            if len(value) > self.degree:
                raise FieldError("coefficient vector too long")
            return self.from_coeffs(value)
        if isinstance(value, str):
            value = int(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError("denominator vanishes in characteristic p")
            return self.div(self.from_int(value.numerator), self.from_int(value.denominator))
        return self.from_int(int(value))

    def from_int(self, n):
        return n % self.p

    def from_coeffs(self, coeffs):
        d = [int(c) % self.p for c in coeffs] + [0] * (self.degree - len(coeffs))
        return self._from_digits(d)

    def coeffs(self, a):
        """Coefficient vector over ``F_p`` of length ``degree``."""
        return self._digits[a] if self._digits is not None else self._to_digits(a)

    def format(self, a):
        if self.degree == 1:
            return str(a)
        return [str(c) for c in self.coeffs(a)]

    def parse(self, obj):
        if self.degree == 1 and isinstance(obj, (list, tuple)):
            return self.from_coeffs(obj)
        return self.coerce(obj)

    def descriptor(self):
        if self.modulus is None:
            return {"kind": "prime", "p": self.p}
        return {"kind": "extension", "p": self.p, "modulus": [str(c) for c in self.modulus]}

    def elements(self):
        return range(self.order)

    # arithmetic

    def add(self, a, b):
        if self.degree == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        da, db = self.coeffs(a), self.coeffs(b)
        return self._from_digits([(x + y) % self.p for x, y in zip(da, db)])

    def neg(self, a):
        if self.degree == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return self._from_digits([(-x) % self.p for x in self.coeffs(a)])

    def sub(self, a, b):
        if self.degree == 1:
            return (a - b) % self.p
        if self.p == 2:
            return a ^ b
        da, db = self.coeffs(a), self.coeffs(b)
        return self._from_digits([(x - y) % self.p for x, y in zip(da, db)])

    def mul(self, a, b):
        if self.degree == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._slow_mul(a, b)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.degree == 1:
            return pow(a, self.p - 2, self.p)
        if self._log is not None:
            return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]
        return self.pow(a, self.order - 2)

    def frobenius(self, a, k=1, q=None):
        """``a ** (q ** k)``; ``q`` defaults to ``p``."""
        if k < 0:
            raise ValueError("negative Frobenius exponent; reduce k modulo the degree")
        q = self.p if q is None else q
        if (self.order - 1) and q % self.p:
            raise ValueError("q must be a power of the characteristic")
        e = pow(q, k, self.order - 1) if self.order > 2 else 1
        if a == 0:
            return 0
        if e == 0:
            e = self.order - 1
        return self.pow(a, e)

    def generator(self):
        """The class of ``t`` (``1`` digit in position one); equals ``0`` mod modulus when degree 1."""
        if self.degree == 1:
            return (-self.modulus[0]) % self.p if self.modulus else 0
        return self.p

    def __repr__(self):
        if self.modulus is None:
            return f"GF({self.p})"
        return f"GF({self.p}, {list(self.modulus)})"

    def _key(self):
        return (self.p, self.modulus if self.degree > 1 else None)

    def __eq__(self, other):
        return isinstance(other, FiniteField) and self._key() == other._key()

    def __hash__(self):
        return hash(("GF",) + self._key())

    def __reduce__(self):
        return (GF, (self.p, self.modulus))


@functools.lru_cache(maxsize=None)
def _gf_cached(p, modulus):
    return FiniteField(p, modulus)


def GF(p, modulus=None):
    """Cached field constructor; ``modulus`` is a constant-first coefficient list."""
    if modulus is not None:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) <= 2:
            modulus = None
    return _gf_cached(p, modulus)


def field_from_descriptor(desc):
    kind = desc["kind"]
    if kind == "rationals":
        return QQ
    if kind == "prime":
        return GF(int(desc["p"]))
    if kind == "extension":
        return GF(int(desc["p"]), [int(c) for c in desc["modulus"]])
    raise FieldError(f"unknown field kind {kind!r}")


class FieldElement:
    """A value of ``field`` with arithmetic operators; immutable."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError("field mismatch")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self.field.div(self._other(other), self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, n):
        return FieldElement(self.field, self.field.pow(self.value, n))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def is_zero(self):
        return self.field.is_zero(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return f"{self.field!r}({self.field.format(self.value)!r})"


def frobenius_power(x, k, q=None):
    """Return ``x ** (q ** k)`` for ``x`` in a finite field (``q`` defaults to ``p``)."""
    if k < 0:
        raise ValueError("k must be nonnegative; use k mod m")
    field = x.field
    if not isinstance(field, FiniteField):
        raise FieldError("Frobenius needs a finite field")
    return FieldElement(field, field.frobenius(x.value, k, q))
