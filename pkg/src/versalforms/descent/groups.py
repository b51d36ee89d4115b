"""Points of split groups over a finite étale algebra and their automorphisms.

Supported kinds: ``SL(n)``, ``PGL(n)``, split tori and finite products.
Matrices are flat row-major tuples over a :class:`FiniteAlgebra`; ``PGL``
classes are stored with their first nonzero entry scaled to 1.

An :class:`AutElement` ``(inner, outer, semilinear)`` acts by
``x -> inner(outer(semilinear(x)))``: ``inner`` is a ``PGL_n(E)`` class acting by
conjugation, ``outer`` a pinned outer automorphism (``None`` for the
identity) and ``semilinear`` a group element acting through the algebra.
Pinned outer automorphisms have integer coefficients, so they commute with
the semilinear part and the triple form is closed under composition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..algebra.intmatrix import IntMatrix
from .ring import (mat_adjugate, mat_det, mat_identity, mat_inv, mat_mul, mat_transpose,
                   matrices_with_det)

ENUMERATION_LIMIT = 10 ** 6


class DescentError(ValueError):
    pass


class SizeError(DescentError):
    """Enumeration request above the cutoff."""


class UnsupportedError(DescentError):
    """Construction outside the supported kinds."""


def _check_size(estimate, what):
    if estimate > ENUMERATION_LIMIT:
        raise SizeError(f"{what}: about {estimate} elements exceeds the cutoff {ENUMERATION_LIMIT}")


class _MatrixSpec:
    projective = False

    def __init__(self, n):
        if n < 2:
            raise DescentError("n must be at least 2")
        self.n = n

    @property
    def rank(self):
        return self.n - 1

    def __eq__(self, other):
        return type(self) is type(other) and self.n == other.n

    def __hash__(self):
        return hash((self.kind, self.n))

    def __repr__(self):
        return f"{self.kind}({self.n})"

    def to_json(self):
        return {"kind": self.kind, "n": self.n}

    # points

    def size_estimate(self, R):
        return R.order ** (self.n * self.n - 1)

    def identity(self, R):
        return mat_identity(R, self.n)

    def canon(self, R, a):
        if not self.projective:
            return a
        c = next(v for v in a if v)
        if c == R.one:
            return a
        if not R.is_unit(c):
            raise UnsupportedError("PGL scaling needs a field")
        ci = R.inv(c)
        return tuple(R.mul(ci, v) for v in a)

    def mul(self, R, a, b):
        return self.canon(R, mat_mul(R, a, b, self.n))

    def inv(self, R, a):
        if self.projective:
            return self.canon(R, mat_adjugate(R, a, self.n))
        return mat_adjugate(R, a, self.n)

    def enumerate(self, R):
        _check_size(self.size_estimate(R), repr(self))
        n = self.n
        if self.projective:
            if not R.is_field:
                raise UnsupportedError("PGL points are only enumerated over fields")
            mats = matrices_with_det(R, n, lambda d: d != R.zero and R.is_unit(d))
            return [m for m in mats if next(v for v in m if v) == R.one]
        return matrices_with_det(R, n, lambda d: d == R.one)

    def contains(self, R, a):
        if len(a) != self.n * self.n:
            return False
        d = mat_det(R, a, self.n)
        if self.projective:
            return any(a) and R.is_unit(d) and self.canon(R, a) == a
        return d == R.one

    # inner automorphisms: PGL_n(E) classes

    def inner_identity(self, R):
        return mat_identity(R, self.n)

    def inner_mul(self, R, g, h):
        return _pgl_canon(R, mat_mul(R, g, h, self.n))

    def inner_inv(self, R, g):
        return _pgl_canon(R, mat_adjugate(R, g, self.n))

    def inner_elements(self, R):
        return PGL(self.n).enumerate(R)

    def inner_apply(self, R, g, x):
        n = self.n
        return self.canon(R, mat_mul(R, mat_mul(R, g, x, n), mat_inv(R, g, n), n))

    def inner_canon(self, R, g):
        return _pgl_canon(R, g)

    # outer automorphisms: None or "flip"

    def outer_compose(self, a, b):
        return None if (a is None) == (b is None) else "flip"

    def outer_inv(self, a):
        return a

    def outer_apply(self, R, o, x):
        if o is None:
            return x
        return self.canon(R, theta(R, x, self.n))

    def outer_on_inner(self, R, o, g):
        if o is None:
            return g
        return _pgl_canon(R, theta(R, g, self.n))

    def semi_apply(self, R, s, x):
        return tuple(R.sigma(s, v) for v in x)

    semi_on_inner = semi_apply

    # standard pinning

    def _diag(self, R, entries):
        n = self.n
        return tuple(entries[i] if i == j else R.zero for i in range(n) for j in range(n))

    def root_vector(self, R, i, a):
        n = self.n
        m = list(mat_identity(R, n))
        m[i * n + i + 1] = a
        return tuple(m)

    def torus_tests(self, R):
        n = self.n
        out = []
        for t in R.units():
            if self.projective:
                for k in range(n):
                    out.append(self.canon(R, self._diag(R, [t if i == k else R.one for i in range(n)])))
            else:
                ti = R.inv(t)
                for k in range(n - 1):
                    e = [R.one] * n
                    e[k], e[k + 1] = t, ti
                    out.append(self._diag(R, e))
        return out

    def borel_tests(self, R):
        vecs = [self.root_vector(R, i, a) for i in range(self.n - 1) for a in R.elements() if a]
        return self.torus_tests(R) + vecs

    def pinning_vectors(self, R):
        return [self.root_vector(R, i, R.one) for i in range(self.n - 1)]

    def in_torus(self, R, x):
        n = self.n
        return all(x[i * n + j] == R.zero for i in range(n) for j in range(n) if i != j)

    def in_borel(self, R, x):
        n = self.n
        return all(x[i * n + j] == R.zero for i in range(n) for j in range(i))


class SL(_MatrixSpec):
    kind = "SL"


class PGL(_MatrixSpec):
    kind = "PGL"
    projective = True


def _pgl_canon(R, a):
    c = next(v for v in a if v)
    if c == R.one:
        return a
    ci = R.inv(c)
    return tuple(R.mul(ci, v) for v in a)


def flip_matrix(R, n):
    """``J`` with ``J[i, n-1-i] = (-1)^i`` (0-based)."""
    J = [R.zero] * (n * n)
    for i in range(n):
        J[i * n + (n - 1 - i)] = R.one if i % 2 == 0 else R.neg(R.one)
    return tuple(J)


def theta(R, x, n):
    """``J x^{-T} J^{-1}``; the adjugate stands in for the inverse up to a scalar."""
    cache = R.__dict__.setdefault("_flip_cache", {})
    if n not in cache:
        J = flip_matrix(R, n)
        cache[n] = (J, mat_inv(R, J, n))
    J, Ji = cache[n]
    xt = mat_transpose(mat_adjugate(R, x, n), n)
    d = mat_det(R, x, n)
    if d != R.one and R.is_unit(d):
        di = R.inv(d)
        xt = tuple(R.mul(di, v) for v in xt)
    return mat_mul(R, mat_mul(R, J, xt, n), Ji, n)


class Torus:
    """Split torus ``G_m^r``; outer automorphisms are integer matrices ``P`` acting on
    points by ``y_k = prod_l x_l^{P[k][l]}``."""

    kind = "Torus"

    def __init__(self, r):
        if r < 0:
            raise DescentError("torus rank must be nonnegative")
        self.r = r

    @property
    def rank(self):
        return self.r

    def __eq__(self, other):
        return isinstance(other, Torus) and self.r == other.r

    def __hash__(self):
        return hash(("Torus", self.r))

    def __repr__(self):
        return f"Torus({self.r})"

    def to_json(self):
        return {"kind": "Torus", "r": self.r}

    def size_estimate(self, R):
        return len(R.units()) ** self.r

    def identity(self, R):
        return (R.one,) * self.r

    def mul(self, R, a, b):
        return tuple(R.mul(x, y) for x, y in zip(a, b))

    def inv(self, R, a):
        return tuple(R.inv(x) for x in a)

    def enumerate(self, R):
        _check_size(self.size_estimate(R), repr(self))
        return [tuple(t) for t in itertools.product(R.units(), repeat=self.r)]

    def contains(self, R, a):
        return len(a) == self.r and all(R.is_unit(x) for x in a)

    def canon(self, R, a):
        return a

    def inner_identity(self, R):
        return None

    def inner_mul(self, R, g, h):
        return None

    def inner_inv(self, R, g):
        return None

    def inner_elements(self, R):
        return [None]

    def inner_apply(self, R, g, x):
        return x

    def inner_canon(self, R, g):
        return None

    def outer_compose(self, a, b):
        if a is None:
            return b
        if b is None:
            return a
        m = a @ b
        return None if m == IntMatrix.identity(self.r) else m

    def outer_inv(self, a):
        return None if a is None else a.inverse()

    def outer_apply(self, R, o, x):
        if o is None:
            return x
        out = []
        for k in range(self.r):
            acc = R.one
            for l in range(self.r):
                e = o[k, l]
                if e:
                    v = x[l] if e > 0 else R.inv(x[l])
                    acc = R.mul(acc, R.pow(v, abs(e)))
            out.append(acc)
        return tuple(out)

    def outer_on_inner(self, R, o, g):
        return None

    def semi_apply(self, R, s, x):
        return tuple(R.sigma(s, v) for v in x)

    def semi_on_inner(self, R, s, g):
        return None

    def torus_tests(self, R):
        return []

    def borel_tests(self, R):
        return []

    def pinning_vectors(self, R):
        return []

    def in_torus(self, R, x):
        return True

    def in_borel(self, R, x):
        return True


class Product:
    """Finite product; outer automorphisms are ``(perm, outers)`` sending factor ``i``
    to factor ``perm[i]`` through ``outers[i]``."""

    kind = "Product"

    def __init__(self, factors):
        self.factors = list(factors)

    @property
    def rank(self):
        return sum(f.rank for f in self.factors)

    def __eq__(self, other):
        return isinstance(other, Product) and self.factors == other.factors

    def __hash__(self):
        return hash(("Product", tuple(self.factors)))

    def __repr__(self):
        return "Product(" + ", ".join(map(repr, self.factors)) + ")"

    def to_json(self):
        return {"kind": "Product", "factors": [f.to_json() for f in self.factors]}

    def size_estimate(self, R):
        out = 1
        for f in self.factors:
            out *= f.size_estimate(R)
        return out

    def identity(self, R):
        return tuple(f.identity(R) for f in self.factors)

    def mul(self, R, a, b):
        return tuple(f.mul(R, x, y) for f, x, y in zip(self.factors, a, b))

    def inv(self, R, a):
        return tuple(f.inv(R, x) for f, x in zip(self.factors, a))

    def enumerate(self, R):
        _check_size(self.size_estimate(R), repr(self))
        return [tuple(t) for t in itertools.product(*(f.enumerate(R) for f in self.factors))]

    def contains(self, R, a):
        return len(a) == len(self.factors) and all(f.contains(R, x) for f, x in zip(self.factors, a))

    def canon(self, R, a):
        return tuple(f.canon(R, x) for f, x in zip(self.factors, a))

    def inner_identity(self, R):
        return tuple(f.inner_identity(R) for f in self.factors)

    def inner_mul(self, R, g, h):
        return tuple(f.inner_mul(R, x, y) for f, x, y in zip(self.factors, g, h))

    def inner_inv(self, R, g):
        return tuple(f.inner_inv(R, x) for f, x in zip(self.factors, g))

    def inner_elements(self, R):
        return [tuple(t) for t in itertools.product(*(f.inner_elements(R) for f in self.factors))]

    def inner_apply(self, R, g, x):
        return tuple(f.inner_apply(R, a, b) for f, a, b in zip(self.factors, g, x))

    def inner_canon(self, R, g):
        return tuple(f.inner_canon(R, x) for f, x in zip(self.factors, g))

    def _is_identity_outer(self, perm, outers):
        return perm == tuple(range(len(perm))) and all(o is None for o in outers)

    def outer_compose(self, a, b):
        if a is None:
            return b
        if b is None:
            return a
        pa, oa = a
        pb, ob = b
        k = len(self.factors)
        perm = tuple(pa[pb[i]] for i in range(k))
        outers = tuple(self.factors[i].outer_compose(oa[pb[i]], ob[i]) for i in range(k))
        return None if self._is_identity_outer(perm, outers) else (perm, outers)

    def outer_inv(self, a):
        if a is None:
            return None
        perm, outers = a
        inv = [0] * len(perm)
        for i, j in enumerate(perm):
            inv[j] = i
        return (tuple(inv), tuple(self.factors[inv[j]].outer_inv(outers[inv[j]])
                                  for j in range(len(perm))))

    def _outer_map(self, o, x, fn):
        if o is None:
            return x
        perm, outers = o
        y = [None] * len(x)
        for i, j in enumerate(perm):
            y[j] = fn(self.factors[i], outers[i], x[i])
        return tuple(y)

    def outer_apply(self, R, o, x):
        return self._outer_map(o, x, lambda f, oi, xi: f.outer_apply(R, oi, xi))

    def outer_on_inner(self, R, o, g):
        return self._outer_map(o, g, lambda f, oi, gi: f.outer_on_inner(R, oi, gi))

    def semi_apply(self, R, s, x):
        return tuple(f.semi_apply(R, s, a) for f, a in zip(self.factors, x))

    def semi_on_inner(self, R, s, g):
        return tuple(f.semi_on_inner(R, s, a) for f, a in zip(self.factors, g))

    def _embed(self, R, k, x):
        return tuple(x if i == k else f.identity(R) for i, f in enumerate(self.factors))

    def torus_tests(self, R):
        return [self._embed(R, k, x) for k, f in enumerate(self.factors) for x in f.torus_tests(R)]

    def borel_tests(self, R):
        return [self._embed(R, k, x) for k, f in enumerate(self.factors) for x in f.borel_tests(R)]

    def pinning_vectors(self, R):
        return [self._embed(R, k, x) for k, f in enumerate(self.factors)
                for x in f.pinning_vectors(R)]

    def in_torus(self, R, x):
        return all(f.in_torus(R, a) for f, a in zip(self.factors, x))

    def in_borel(self, R, x):
        return all(f.in_borel(R, a) for f, a in zip(self.factors, x))


def spec_from_json(data):
    kind = data["kind"]
    if kind == "SL":
        return SL(data["n"])
    if kind == "PGL":
        return PGL(data["n"])
    if kind == "Torus":
        return Torus(data["r"])
    if kind == "Product":
        return Product([spec_from_json(f) for f in data["factors"]])
    raise UnsupportedError(f"unknown group kind {kind!r}")


def parse_spec(text):
    """``sl3``, ``pgl2``, ``gm``, ``gm^2``, ``sl2xpgl2``, ``trivial`` -> GroupSpec."""
    t = text.strip().lower()
    if t in ("trivial", "gm^0", "t0"):
        return Torus(0)
    parts = t.split("x")
    if len(parts) > 1:
        return Product([parse_spec(p) for p in parts])
    if t.startswith("sl"):
        return SL(int(t[2:]))
    if t.startswith("pgl"):
        return PGL(int(t[3:]))
    if t == "gm":
        return Torus(1)
    if t.startswith("gm^"):
        return Torus(int(t[3:]))
    if t.startswith("t") and t[1:].isdigit():
        return Torus(int(t[1:]))
    raise UnsupportedError(f"unsupported group {text!r}")


@dataclass(frozen=True)
class AutElement:
    inner: object
    outer: object
    semilinear: int

    def to_json(self):
        def enc(v):
            if isinstance(v, IntMatrix):
                return {"matrix": v.tolist()}
            if isinstance(v, tuple):
                return [enc(x) for x in v]
            return v
        return {"inner": enc(self.inner), "outer": enc(self.outer), "semilinear": self.semilinear}


class PointGroup:
    """``G(E)`` for a spec and a finite algebra, with its automorphism calculus."""

    def __init__(self, spec, ring):
        self.spec = spec
        self.ring = ring
        self.gamma = ring.gamma
        self._elements = None

    # group structure

    @property
    def identity(self):
        return self.spec.identity(self.ring)

    def mul(self, a, b):
        return self.spec.mul(self.ring, a, b)

    def inv(self, a):
        return self.spec.inv(self.ring, a)

    def __contains__(self, a):
        return self.spec.contains(self.ring, a)

    @property
    def size_estimate(self):
        return self.spec.size_estimate(self.ring)

    @property
    def enumerable(self):
        return self.size_estimate <= ENUMERATION_LIMIT

    @property
    def elements(self):
        if self._elements is None:
            self._elements = self.spec.enumerate(self.ring)
        return self._elements

    @property
    def order(self):
        return len(self.elements)

    # automorphisms

    def aut_identity(self):
        return AutElement(self.spec.inner_identity(self.ring), None, self.gamma.identity)

    def inner_aut(self, g):
        return AutElement(self.spec.inner_canon(self.ring, g), None, self.gamma.identity)

    def outer_aut(self, o):
        return AutElement(self.spec.inner_identity(self.ring), o, self.gamma.identity)

    def semilinear_aut(self, s):
        return AutElement(self.spec.inner_identity(self.ring), None, s)

    def compose(self, a, b):
        """``a`` after ``b``."""
        S, R = self.spec, self.ring
        moved = S.outer_on_inner(R, a.outer, S.semi_on_inner(R, a.semilinear, b.inner))
        return AutElement(S.inner_mul(R, a.inner, moved), S.outer_compose(a.outer, b.outer),
                          self.gamma.mul(a.semilinear, b.semilinear))

    def inverse(self, a):
        S, R = self.spec, self.ring
        o = S.outer_inv(a.outer)
        s = self.gamma.inv(a.semilinear)
        inner = S.outer_on_inner(R, o, S.semi_on_inner(R, s, S.inner_inv(R, a.inner)))
        return AutElement(inner, o, s)

    def apply(self, a, x):
        S, R = self.spec, self.ring
        y = S.semi_apply(R, a.semilinear, x) if a.semilinear != self.gamma.identity else x
        y = S.outer_apply(R, a.outer, y)
        if a.inner != S.inner_identity(R):
            y = S.inner_apply(R, a.inner, y)
        return y

    def inner_group(self):
        """The inner automorphism group as an explicit group of canonical elements."""
        from ..groups.finite_group import ExplicitGroup
        S, R = self.spec, self.ring
        return ExplicitGroup(S.inner_elements(R), lambda g, h: S.inner_mul(R, g, h),
                             lambda g: S.inner_inv(R, g), S.inner_identity(R), "Inn")

    def __repr__(self):
        return f"PointGroup({self.spec!r} over {self.ring!r})"
