"""Sparse multivariate polynomials with integer coefficients.

Only what the symbolic presentations need: ring operations, determinants by
memoized cofactor expansion, and evaluation at field points.
"""

from __future__ import annotations

import functools


class MPoly:
    """``{exponent tuple: int}`` over a fixed number of variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: int(c)})

    @classmethod
    def var(cls, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    def is_zero(self):
        return not self.terms

    def _lift(self, other):
        if isinstance(other, MPoly):
            return other
        return MPoly.const(self.nvars, other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return MPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.nvars, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        out = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = out.get(k, 0) + v1 * v2
        return MPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = MPoly.const(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def total_degree(self):
        return max((sum(k) for k in self.terms), default=-1)

    def evaluate(self, values, field):
        """Value at a point given as raw field values, one per variable."""
        acc = field.zero
        for k, c in self.terms.items():
            t = field.from_int(c)
            for v, e in zip(values, k):
                if e:
                    t = field.mul(t, field.pow(v, e))
            acc = field.add(acc, t)
        return acc

    def to_json(self):
        """Sparse monomial list ``[[coefficient, [exponents...]], ...]`` in sorted order."""
        return [[c, list(k)] for k, c in sorted(self.terms.items(), reverse=True)]

    def format(self, names):
        if not self.terms:
            return "0"
        parts = []
        for k, c in sorted(self.terms.items(), reverse=True):
            mon = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, k) if e)
            if not mon:
                parts.append(str(c))
            elif c == 1:
                parts.append(mon)
            elif c == -1:
                parts.append("-" + mon)
            else:
                parts.append(f"{c}*{mon}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"MPoly({self.format([f'v{i}' for i in range(self.nvars)])})"


def upoly_mul(a, b, zero):
    """Product of coefficient lists (constant first) with entries in any ring."""
    if not a or not b:
        return []
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def upoly_add(a, b, zero):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else zero) + (b[i] if i < len(b) else zero) for i in range(n)]


def upoly_compose(outer, inner, zero, one):
    acc = []
    for c in reversed(outer):
        acc = upoly_add(upoly_mul(acc, inner, zero), [c], zero)
    return acc


def mpoly_det(matrix, nvars):
    """Determinant by cofactor expansion along columns, memoized on row subsets."""
    n = len(matrix)
    zero = MPoly(nvars)
    if n == 0:
        return MPoly.const(nvars, 1)

    @functools.lru_cache(maxsize=None)
    def minor(col, rows):
        if col == n:
            return MPoly.const(nvars, 1)
        acc = zero
        sign = 1
        for idx, r in enumerate(rows):
            entry = matrix[r][col]
            if not entry.is_zero():
                rest = rows[:idx] + rows[idx + 1:]
                term = entry * minor(col + 1, rest)
                acc = acc + term if sign > 0 else acc - term
            sign = -sign
        return acc

    return minor(0, tuple(range(n)))
