"""Points ``(f, h, d, e)`` of the étale-algebra family attached to a finite group.

For ``Gamma`` of order ``m`` a point over a field ``F`` consists of a monic
``f`` of degree ``m`` and polynomials ``h_i`` (degree ``<= m-1``), ``d_i``
(degree ``<= m(m-1)-m``) and ``e_ij`` (degree ``<= (m-1)^2-m``) such that

    (a) Res(f, f') is invertible,
    (b) f * d_i = f o h_i,
    (c) f * e_ij = h_i o h_j - h_{mu(i,j)},

where ``mu`` is the multiplication table of ``Gamma``.  A negative degree bound
forces the polynomial to be zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..algebra.fields import GF, QQ, field_from_descriptor
from ..algebra.linalg import nullspace
from ..algebra.poly import Poly, find_irreducible, poly_compose, poly_resultant
from ..groups.catalog import cyclic_group, group_by_id
from ..groups.finite_group import FiniteGroup


class FamilyError(ValueError):
    pass


def degree_bounds(m):
    """``(h, d, e)`` degree bounds; ``-1`` means the polynomial must vanish."""
    return m - 1, max(-1, m * (m - 1) - m), max(-1, (m - 1) ** 2 - m)


@dataclass
class FamilyPoint:
    base: object            # Field
    gamma: FiniteGroup
    f: Poly
    h: list                 # indexed by group element
    d: list
    e: list                 # e[i][j]
    opposite: bool = False  # condition (c) holds for the opposite table
    meta: dict = field(default_factory=dict)

    @property
    def m(self):
        return self.gamma.order

    def mu(self, i, j):
        return self.gamma.mul(j, i) if self.opposite else self.gamma.mul(i, j)

    def ring_action_index(self, g):
        """Index ``k`` such that ``z -> h_k(z)`` is the action of ``g`` as a left action."""
        if self.opposite or self.gamma.is_abelian():
            return g
        return self.gamma.inv(g)

    def to_json(self, group_id=None):
        F = self.base
        out = {
            "field": F.descriptor(),
            "group": group_id or getattr(self.gamma, "id", None) or self.gamma.to_json(),
            "f": self.f.to_json(),
            "h": [p.to_json() for p in self.h],
            "d": [p.to_json() for p in self.d],
            "e": [[p.to_json() for p in row] for row in self.e],
        }
        if self.opposite:
            out["opposite"] = True
        return out

    @classmethod
    def from_json(cls, data):
        F = field_from_descriptor(data["field"])
        g = data["group"]
        gamma = group_by_id(g) if isinstance(g, str) else FiniteGroup.from_json(g)
        P = lambda c: Poly.from_json(F, c)
        return cls(F, gamma, P(data["f"]), [P(c) for c in data["h"]], [P(c) for c in data["d"]],
                   [[P(c) for c in row] for row in data["e"]], bool(data.get("opposite", False)))


@dataclass
class FamilyReport:
    checks: dict            # name -> bool
    failures: list          # (check, detail, witness)

    @property
    def ok(self):
        return all(self.checks.values())

    def __bool__(self):
        return self.ok

    def summary(self):
        lines = [f"{k}: {'pass' if v else 'FAIL'}" for k, v in self.checks.items()]
        for name, detail, witness in self.failures:
            lines.append(f"  {name} {detail}: {witness}")
        return "\n".join(lines)


def _zero(F):
    return Poly(F, [])


def verify_family_point(pt):
    """Check shape, degree bounds, conditions (a)-(c) and ``dim E^Gamma = 1``."""
    F, G, f = pt.base, pt.gamma, pt.f
    m = G.order
    checks = {}
    fails = []
    hb, db, eb = degree_bounds(m)

    shape_ok = f.is_monic() and f.degree == m and len(pt.h) == m and len(pt.d) == m and \
        len(pt.e) == m and all(len(row) == m for row in pt.e)
    checks["shape"] = shape_ok
    if not shape_ok:
        fails.append(("shape", "f monic of degree |Gamma| with m h/d and m x m e", f"deg f = {f.degree}"))
        for k in ("degrees", "a", "b", "c", "identity", "d"):
            checks[k] = False
        return FamilyReport(checks, fails)

    deg_ok = True
    for name, polys, bound in (("h", pt.h, hb), ("d", pt.d, db),
                               ("e", [p for row in pt.e for p in row], eb)):
        for idx, p in enumerate(polys):
            if p.degree > bound:
                deg_ok = False
                fails.append(("degrees", f"{name}[{idx}] exceeds bound {bound}", p))
    checks["degrees"] = deg_ok

    res = poly_resultant(f, f.derivative())
    checks["a"] = not res.is_zero()
    if res.is_zero():
        fails.append(("a", "Res(f, f') is not a unit", res))

    b_ok = True
    for i in G.elements:
        diff = f * pt.d[i] - poly_compose(f, pt.h[i])
        if not diff.is_zero():
            b_ok = False
            fails.append(("b", f"f*d[{i}] != f o h[{i}]", diff))
    checks["b"] = b_ok

    c_ok = True
    for i in G.elements:
        for j in G.elements:
            diff = f * pt.e[i][j] - (poly_compose(pt.h[i], pt.h[j]) - pt.h[pt.mu(i, j)])
            if not diff.is_zero():
                c_ok = False
                fails.append(("c", f"f*e[{i}][{j}] != h[{i}] o h[{j}] - h[{pt.mu(i, j)}]", diff))
    checks["c"] = c_ok

    x = Poly.x(F)
    ident = (pt.h[G.identity] - x) % f
    checks["identity"] = ident.is_zero()
    if not ident.is_zero():
        fails.append(("identity", "h[identity] is not x mod f", pt.h[G.identity]))

    if checks["a"]:
        dim = invariant_dimension(F, f, pt.h)
        checks["d"] = dim == 1
        if dim != 1:
            fails.append(("d", "dim of invariants != 1", dim))
    else:
        checks["d"] = False
    return FamilyReport(checks, fails)


def action_matrix(F, f, h):
    """Matrix (rows = images of 1, z, ..., z^{m-1}) of ``p(z) -> p(h(z)) mod f``."""
    m = f.degree
    rows = []
    power = Poly(F, [1])
    hm = h % f
    for _ in range(m):
        rows.append([power[k] for k in range(m)])
        power = (power * hm) % f
    return rows


def invariant_basis(F, f, hs):
    """Basis of ``{p : p(h(z)) = p(z) mod f for all h}`` as coefficient vectors."""
    m = f.degree
    eqs = []
    for h in hs:
        M = action_matrix(F, f, h)
        # p -> sum_k p_k M[k] - p ; equations indexed by output coordinate
        for col in range(m):
            eqs.append([F.sub(M[k][col], F.one if k == col else F.zero) for k in range(m)])
    return nullspace(eqs, F, m)


def invariant_dimension(F, f, hs):
    return len(invariant_basis(F, f, hs))


def complete_point(F, gamma, f, h, allow_opposite=True):
    """Fill in ``d`` and ``e`` by exact division; raises when a division fails."""
    m = gamma.order
    h = [p % f for p in h]
    d = []
    for i, hi in enumerate(h):
        q, r = divmod(poly_compose(f, hi), f)
        if not r.is_zero():
            raise FamilyError(f"h[{i}] does not send roots of f to roots (remainder {r})")
        d.append(q)

    def e_table(opposite):
        e = [[None] * m for _ in range(m)]
        for i in range(m):
            for j in range(m):
                k = gamma.mul(j, i) if opposite else gamma.mul(i, j)
                q, r = divmod(poly_compose(h[i], h[j]) - h[k], f)
                if not r.is_zero():
                    return None
                e[i][j] = q
        return e

    e = e_table(False)
    opposite = False
    if e is None and allow_opposite:
        e = e_table(True)
        opposite = e is not None
    if e is None:
        raise FamilyError("h does not realize the group law (condition c division fails)")
    return FamilyPoint(F, gamma, f, h, d, e, opposite)


def finite_base_field(p, k):
    if k < 1:
        raise FamilyError("q_degree must be positive")
    if k == 1:
        return GF(p)
    return GF(p, find_irreducible(p, k).coeffs)


def construct_point_finite_field(p, q_degree, m):
    """Point over ``F_q`` (``q = p^q_degree``) for ``Z/m`` from ``F_{q^m}/F_q``.

    ``f`` is the smallest monic irreducible of degree ``m`` over ``F_q`` and
    ``h_i = x^(q^i) mod f``; element ``i`` of ``Z/m`` is the ``i``-th power of
    Frobenius.
    """
    if m < 1:
        raise FamilyError("m must be positive")
    F = finite_base_field(p, q_degree)
    f = find_irreducible(p, m, field=F if q_degree > 1 else None)
    q = F.order
    x = Poly.x(F)
    h = [x.powmod(q ** i, f) for i in range(m)]
    pt = complete_point(F, cyclic_group(m), f, h, allow_opposite=False)
    pt.meta.update({"construction": "finite_field", "p": p, "q_degree": q_degree, "m": m})
    return pt


def construct_point_rational(f, conjugates, gamma, assignment=None):
    """Point over ``Q`` from a Galois polynomial and its conjugate root expressions.

    ``conjugates`` are polynomials ``c`` with ``f(c(x)) = 0 mod f``;
    ``assignment[g]`` is the index of the conjugate attached to group element
    ``g`` (identity order by default).
    """
    if f.field != QQ:
        raise FamilyError("rational constructor needs f over Q")
    m = gamma.order
    if not f.is_monic() or f.degree != m:
        raise FamilyError("f must be monic of degree |Gamma|")
    if poly_resultant(f, f.derivative()).is_zero():
        raise FamilyError("f is not separable")
    if len(conjugates) != m:
        raise FamilyError("need one conjugate per group element")
    assignment = list(range(m)) if assignment is None else list(assignment)
    if sorted(assignment) != list(range(m)):
        raise FamilyError("assignment is not a bijection")
    h = [Poly(QQ, conjugates[assignment[g]].coeffs) % f for g in gamma.elements]
    if len(set(h)) != m:
        raise FamilyError("conjugates are not pairwise distinct mod f")
    for i, hi in enumerate(h):
        if not (poly_compose(f, hi) % f).is_zero():
            raise FamilyError(f"conjugate {i} is not a root of f in Q[x]/(f)")
    if h[gamma.identity] != Poly.x(QQ) % f:
        raise FamilyError("the identity must be assigned the root x")
    pt = complete_point(QQ, gamma, f, h)
    pt.meta["construction"] = "rational"
    return pt


def cyclotomic_polynomial(n):
    x = Poly.x(QQ)
    num = x ** n - 1
    for d in range(1, n):
        if n % d == 0:
            num = num.exact_div(cyclotomic_polynomial(d))
    return num


def cyclotomic_point(n):
    """Point for ``Q(zeta_n)``: the conjugates of ``zeta_n`` are its unit powers.

    When ``(Z/n)^x`` is cyclic the group is ``Z/phi(n)`` with element ``k``
    acting by ``x -> x^(g^k)`` for the smallest generator ``g``.
    """
    from math import gcd
    f = cyclotomic_polynomial(n)
    units = [u for u in range(1, n) if gcd(u, n) == 1] if n > 1 else [0]
    if n <= 2:
        units = [1]
    phi = len(units)
    gen = None
    for g in units:
        seen, x = set(), 1
        for _ in range(phi):
            seen.add(x)
            x = x * g % n
        if len(seen) == phi:
            gen = g
            break
    x = Poly.x(QQ)
    if gen is not None:
        gamma = cyclic_group(phi)
        exps = [pow(gen, k, n) if n > 1 else 1 for k in range(phi)]
    else:
        from ..groups.finite_group import group_from_elements
        gamma, elems = group_from_elements(units, lambda a, b: a * b % n, 1, f"(Z/{n})^x")
        exps = elems
    conj = [x.powmod(k, f) for k in exps]
    pt = construct_point_rational(f, conj, gamma)
    pt.meta.update({"construction": "cyclotomic", "n": n})
    return pt
