"""Symbolic presentations of the parameter space of family points and of the
universal étale algebra over it.

Variables, in order: the ``m`` non-leading coefficients of ``f``; the
coefficients of every ``h_i``, ``d_i`` and ``e_ij`` up to their degree bounds;
an inverse ``u`` for ``Res(f, f')``.  Relations: ``u * Res(f, f') - 1`` and the
coefficients of conditions (b) and (c).  Relations that vanish identically are
dropped (this only happens for the trivial group).
"""

from __future__ import annotations

from dataclasses import dataclass

from ..algebra.mpoly import MPoly, mpoly_det, upoly_add, upoly_compose, upoly_mul
from .family import degree_bounds


@dataclass
class Presentation:
    variables: list
    relations: list          # MPoly over len(variables) variables
    adjoined: str = None     # extra variable of the algebra presentation
    group_order: int = 0

    @property
    def nvars(self):
        return len(self.variables)

    def evaluate(self, values, field):
        """Relation values at a point (a dict name -> raw field value)."""
        vec = [values[v] for v in self.variables]
        return [r.evaluate(vec, field) for r in self.relations]

    def vanishes_at(self, values, field):
        return all(field.is_zero(v) for v in self.evaluate(values, field))

    def to_json(self):
        return {"variables": list(self.variables),
                "relations": [r.to_json() for r in self.relations],
                "adjoined": self.adjoined}

    def format(self):
        return [r.format(self.variables) for r in self.relations]


def expected_counts(m):
    """``(variables, relations)`` before dropping identically zero relations."""
    hb, db, eb = degree_bounds(m)
    nvars = m + m * m + m * (db + 1) + m * m * (eb + 1) + 1
    nrels = 1 + m * (m * (m - 1) + 1) + m * m * ((m - 1) ** 2 + 1)
    return nvars, nrels


def _layout(m):
    hb, db, eb = degree_bounds(m)
    names = [f"a{k}" for k in range(m)]
    names += [f"h{i}_{k}" for i in range(m) for k in range(hb + 1)]
    names += [f"d{i}_{k}" for i in range(m) for k in range(db + 1)]
    names += [f"e{i}_{j}_{k}" for i in range(m) for j in range(m) for k in range(eb + 1)]
    names.append("u")
    return names


def _symbolic(m, gamma, extra=0):
    names = _layout(m)
    n = len(names) + extra
    idx = {v: k for k, v in enumerate(names)}
    V = lambda name: MPoly.var(n, idx[name])
    zero, one = MPoly(n), MPoly.const(n, 1)
    hb, db, eb = degree_bounds(m)
    f = [V(f"a{k}") for k in range(m)] + [one]
    h = [[V(f"h{i}_{k}") for k in range(hb + 1)] for i in range(m)]
    d = [[V(f"d{i}_{k}") for k in range(db + 1)] for i in range(m)]
    e = [[[V(f"e{i}_{j}_{k}") for k in range(eb + 1)] for j in range(m)] for i in range(m)]
    return names, n, V, zero, one, f, h, d, e


def _sylvester(f, g, zero):
    """Sylvester matrix for formal degrees ``len(f)-1`` and ``len(g)-1``."""
    m, k = len(f) - 1, len(g) - 1
    size = m + k
    fr, gr = list(reversed(f)), list(reversed(g))
    rows = []
    for i in range(k):
        rows.append([zero] * i + fr + [zero] * (size - i - len(fr)))
    for i in range(m):
        rows.append([zero] * i + gr + [zero] * (size - i - len(gr)))
    return rows


def emit_presentation(gamma):
    """``(family presentation, algebra presentation)`` for the group ``gamma``."""
    m = gamma.order
    names, n, V, zero, one, f, h, d, e = _symbolic(m, gamma, extra=0)
    fprime = [f[k] * k for k in range(1, m + 1)]
    if len(fprime) == 1:
        res = fprime[0]  # Res(f, c) = c^deg f with deg f = 1
    else:
        res = mpoly_det(_sylvester(f, fprime, zero), n)
    relations = [V("u") * res - 1]
    for i in range(m):
        lhs = upoly_mul(f, d[i], zero)
        rhs = upoly_compose(f, h[i], zero, one)
        relations += _coefficients(upoly_add(lhs, [-c for c in rhs], zero))
    for i in range(m):
        for j in range(m):
            k = gamma.mul(i, j)
            lhs = upoly_mul(f, e[i][j], zero)
            rhs = upoly_add(upoly_compose(h[i], h[j], zero, one), [-c for c in h[k]], zero)
            relations += _coefficients(upoly_add(lhs, [-c for c in rhs], zero))
    family = Presentation(names, [r for r in relations if not r.is_zero()], None, m)

    # algebra presentation: same relations in one more variable, plus f(z) = 0
    names2 = names + ["z"]
    lift = lambda r: MPoly(n + 1, {k + (0,): c for k, c in r.terms.items()})
    zvar = MPoly.var(n + 1, n)
    fz = MPoly(n + 1)
    for k, c in enumerate(f):
        fz = fz + lift(c) * zvar ** k
    algebra = Presentation(names2, [lift(r) for r in family.relations] + [fz], "z", m)
    return family, algebra


def _coefficients(poly):
    return [c for c in poly]


def point_values(pt):
    """Coordinates of a family point in the presentation's variables (raw field values).

    Missing high coefficients are zero; ``u`` is the inverse of the symbolic
    resultant at the point, or zero when that vanishes.
    """
    F = pt.base
    m = pt.m
    hb, db, eb = degree_bounds(m)
    vals = {}
    for k in range(m):
        vals[f"a{k}"] = pt.f[k]
    for i in range(m):
        for k in range(hb + 1):
            vals[f"h{i}_{k}"] = pt.h[i][k]
        for k in range(db + 1):
            vals[f"d{i}_{k}"] = pt.d[i][k]
        for j in range(m):
            for k in range(eb + 1):
                vals[f"e{i}_{j}_{k}"] = pt.e[i][j][k]
    vals["u"] = F.zero
    fam, _ = emit_presentation(pt.gamma)
    r = fam.relations[0]
    # relation 0 is u*R - 1; recover R as its u-linear part evaluated at the point
    names = fam.variables
    uidx = names.index("u")
    R = MPoly(r.nvars, {k[:uidx] + (0,) + k[uidx + 1:]: c for k, c in r.terms.items() if k[uidx] == 1})
    vec = [vals[v] for v in names]
    Rv = R.evaluate(vec, F)
    vals["u"] = F.zero if F.is_zero(Rv) else F.inv(Rv)
    return vals


def tuple_satisfies(presentation, values, field):
    return presentation.vanishes_at(values, field)
