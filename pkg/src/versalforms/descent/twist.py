"""Pinned outer automorphisms, twisted actions and their fixed-point groups.

The group ``Gamma`` of the algebra acts on ``G(E)`` by ``gamma -> alpha(gamma) o sigma_gamma``
with ``alpha`` pinned.  A cocycle ``c`` (values in AutElements) twists this to
``*_c(gamma) = c(gamma) o gamma``; the fixed points of the twisted action form the
descended group.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..algebra.intmatrix import IntMatrix
from ..groups.cohomology import Cocycle, GroupAction, z1_cocycles
from ..groups.finite_group import ExplicitGroup
from .groups import (DescentError, PointGroup, Product, Torus, UnsupportedError,
                     _MatrixSpec)


# pinned outer automorphisms


def standard_datum(spec):
    """The based root datum of a spec, in the coordinates pinned_outer expects."""
    from ..rootdata.named import adjoint, product, simply_connected, torus
    if isinstance(spec, Torus):
        return torus(spec.r)
    if isinstance(spec, _MatrixSpec):
        comp = (f"A{spec.n - 1}",)
        return adjoint(comp) if spec.projective else simply_connected(comp)
    if isinstance(spec, Product):
        return product(*(standard_datum(f) for f in spec.factors))
    raise UnsupportedError(f"no root datum for {spec!r}")


def _outer_from_matrix(spec, M):
    """Pinned outer automorphism of ``spec`` inducing ``x -> x @ M`` on its standard datum."""
    ident = IntMatrix.identity(M.rows)
    if isinstance(spec, Torus):
        # the point map is t -> t o f^{-1}
        return None if M == ident else M.inverse()
    if isinstance(spec, _MatrixSpec):
        return None if M == ident else "flip"
    if isinstance(spec, Product):
        offs, off = [], 0
        for f in spec.factors:
            offs.append(off)
            off += f.rank
        k = len(spec.factors)
        perm, outers = [], []
        for i, fi in enumerate(spec.factors):
            rows = range(offs[i], offs[i] + fi.rank)
            targets = []
            for j, fj in enumerate(spec.factors):
                cols = range(offs[j], offs[j] + fj.rank)
                if any(M[r, c] for r in rows for c in cols):
                    targets.append(j)
            if fi.rank == 0:
                targets = [i]
            if len(targets) != 1 or spec.factors[targets[0]] != fi:
                raise UnsupportedError("automorphism does not permute the factors")
            j = targets[0]
            B = IntMatrix([[M[r, c] for c in range(offs[j], offs[j] + fi.rank)] for r in rows]) \
                if fi.rank else IntMatrix.identity(0)
            perm.append(j)
            outers.append(_outer_from_matrix(fi, B) if fi.rank else None)
        perm, outers = tuple(perm), tuple(outers)
        if perm == tuple(range(k)) and all(o is None for o in outers):
            return None
        return (perm, outers)
    raise UnsupportedError(f"unsupported spec {spec!r}")


def pinned_outer(group, diagram_aut, datum=None):
    """The pinned automorphism of ``group`` (a PointGroup) realizing ``diagram_aut``.

    ``diagram_aut`` is a BasedAut of ``datum`` (default: the group kind's own
    datum), an IntMatrix on that datum, or ``"flip"``/``None``.
    """
    spec = group.spec
    if diagram_aut is None or diagram_aut == "id":
        return group.aut_identity()
    if diagram_aut == "flip":
        if not isinstance(spec, _MatrixSpec):
            raise UnsupportedError("the flip is defined for SL(n) and PGL(n)")
        return group.outer_aut(None if spec.n == 2 else "flip")
    M = diagram_aut if isinstance(diagram_aut, IntMatrix) else diagram_aut.matrix
    std = standard_datum(spec)
    if datum is not None:
        from ..rootdata.enumerate import find_isomorphism
        iso = find_isomorphism(datum, std)
        if iso is None:
            raise UnsupportedError(f"{datum.name} is not the root datum of {spec!r}")
        M = iso.inverse() @ M @ iso
    if M.rows != spec.rank:
        raise UnsupportedError("automorphism has the wrong rank")
    return group.outer_aut(_outer_from_matrix(spec, M))


# twists


class AutCoefficients:
    """AutElements of a PointGroup as a coefficient group (no enumeration)."""

    def __init__(self, group):
        self.group = group
        self.identity = group.aut_identity()

    def mul(self, a, b):
        return self.group.compose(a, b)

    def inv(self, a):
        return self.group.inverse(a)


@dataclass
class TwistSpec:
    group: PointGroup
    alpha: list                      # AutElement per element of gamma (pinned, outer only)
    cocycle: list = None             # AutElement per element of gamma; None = trivial
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.cocycle is None:
            self.cocycle = [self.group.aut_identity() for _ in self.gamma.elements]

    @property
    def gamma(self):
        return self.group.gamma

    def action(self, g):
        """The untwisted action ``alpha(g) o sigma_g``."""
        G = self.group
        return G.compose(self.alpha[g], G.semilinear_aut(g))

    def star(self, g):
        return self.group.compose(self.cocycle[g], self.action(g))

    def as_cocycle(self):
        G = self.group
        coeffs = AutCoefficients(G)
        act = GroupAction(self.gamma, coeffs,
                          lambda g, b: G.compose(G.compose(self.action(g), b),
                                                 G.inverse(self.action(g))), check=False)
        return Cocycle(self.gamma, coeffs, act, tuple(self.cocycle))

    def validate(self):
        G, gam = self.group, self.gamma
        for a in gam.elements:
            if self.alpha[a].inner != G.aut_identity().inner or self.alpha[a].semilinear != gam.identity:
                raise DescentError("alpha must take pinned outer values")
            for b in gam.elements:
                if G.compose(self.alpha[a], self.alpha[b]) != self.alpha[gam.mul(a, b)]:
                    raise DescentError(f"alpha is not a homomorphism at ({a}, {b})")
        bad = self.as_cocycle().defect()
        if bad is not None:
            raise DescentError(f"cocycle identity fails at {bad}")


def trivial_alpha(group):
    return [group.aut_identity() for _ in group.gamma.elements]


def alpha_from_generator(group, aut):
    """alpha for a cyclic group sending the generator ``1`` to ``aut`` (element k -> aut^k)."""
    out = [group.aut_identity()]
    for _ in range(1, group.gamma.order):
        out.append(group.compose(out[-1], aut))
    return out


def twisted_fixed_points(t, validate=True):
    """``{x in G(E) : *_c(g) x = x for g in a generating set}``, as an ExplicitGroup."""
    if validate:
        t.validate()
    G = t.group
    gens = [g for g in t.gamma.generators()]
    stars = [t.star(g) for g in gens]
    fixed = []
    for x in G.elements:
        if all(G.apply(s, x) == x for s in stars):
            fixed.append(x)
    fixed.sort()
    H = ExplicitGroup(fixed, G.mul, G.inv, G.identity, f"{G.spec!r} twisted")
    _check_closed(H)
    return H


def _check_closed(H, full_limit=400):
    elems = H.elements
    if not elems or H.identity not in H:
        raise DescentError("fixed points do not contain the identity")
    sample = elems if len(elems) <= full_limit else elems[:: max(1, len(elems) // 60)]
    for a in sample:
        if H.inv(a) not in H:
            raise DescentError("fixed points are not closed under inverses")
        for b in sample:
            if H.mul(a, b) not in H:
                raise DescentError("fixed points are not closed under multiplication")


def embedded_base_points(group):
    """``G(F)`` inside ``G(E)``: points with all coordinates in the base field."""
    q = group.ring.q

    def base(x):
        if isinstance(x, tuple):
            return all(base(v) for v in x)
        return x < q
    return sorted(x for x in group.elements if base(x))


def induced_cocycle(t, a):
    """``g -> a^{-1} o g o a o g^{-1}`` for an automorphism ``a`` of ``t.group``."""
    G = t.group
    ainv = G.inverse(a)
    vals = []
    for g in t.gamma.elements:
        act = t.action(g)
        vals.append(G.compose(G.compose(ainv, act), G.compose(a, G.inverse(act))))
    return vals


def twist_with(t, cocycle):
    return TwistSpec(t.group, t.alpha, list(cocycle), dict(t.meta))


# inner cocycles


def inner_action(t):
    """Action of gamma on the inner group: ``g . h = alpha(g)(sigma_g(h))``."""
    G = t.group
    S, R = G.spec, G.ring

    def act(g, h):
        a = t.action(g)
        return S.outer_on_inner(R, a.outer, S.semi_on_inner(R, a.semilinear, h))
    return act


def inner_cocycles(t, limit=10 ** 6):
    """All cocycles of gamma with values in the inner group, as value tuples."""
    inner = t.group.inner_group()
    act = GroupAction(t.gamma, inner, inner_action(t), check=False)
    return inner, act, z1_cocycles(t.gamma, inner, act, limit=limit)


def inner_to_aut(t, values):
    return [t.group.inner_aut(v) for v in values]


def cohomologous_to_trivial(cocycle):
    """A witness ``phi`` with ``c(g) = phi^{-1} (g . phi)``, or ``None``."""
    A, act = cocycle.coefficients, cocycle.action
    for phi in A.elements:
        pinv = A.inv(phi)
        if all(cocycle.values[g] == A.mul(pinv, act(g, phi)) for g in cocycle.gamma.elements):
            return phi
    return None


# quasi-split detection


@dataclass
class QuasiSplitReport:
    quasi_split: bool
    witness: list = None          # fixed points lying in the standard Borel
    failure: str = None

    def __bool__(self):
        return self.quasi_split


def preserves_pinning(group, aut):
    S, R = group.spec, group.ring
    for x in S.torus_tests(R):
        if not S.in_torus(R, group.apply(aut, x)):
            return False, "torus moved"
    for x in S.borel_tests(R):
        if not S.in_borel(R, group.apply(aut, x)):
            return False, "Borel moved"
    pins = set(S.pinning_vectors(R))
    for x in pins:
        if group.apply(aut, x) not in pins:
            return False, "pinning vectors moved"
    return True, None


def is_quasi_split_twist(t, fixed=None):
    """Whether every ``*_c(g)`` preserves the standard pinning; the witness is the
    fixed-point subgroup of the standard Borel."""
    G = t.group
    for g in t.gamma.generators():
        ok, why = preserves_pinning(G, t.star(g))
        if not ok:
            return QuasiSplitReport(False, None, f"element {g}: {why}")
    if fixed is None:
        fixed = twisted_fixed_points(t)
    S, R = G.spec, G.ring
    return QuasiSplitReport(True, [x for x in fixed.elements if S.in_borel(R, x)])


def quasi_split_flag(t, limit=10 ** 5):
    """Quasi-split up to cohomology: search inner coboundaries for a pinned cocycle."""
    G = t.group
    if all(preserves_pinning(G, t.star(g))[0] for g in t.gamma.generators()):
        return True
    inner = G.inner_group() if G.spec.size_estimate(G.ring) <= limit else None
    if inner is None:
        raise DescentError("inner group too large for the coboundary search")
    coeffs = t.as_cocycle()
    for phi in inner.elements:
        c2 = coeffs.twist_by(G.inner_aut(phi))
        t2 = twist_with(t, c2.values)
        if all(preserves_pinning(G, t2.star(g))[0] for g in t.gamma.generators()):
            return True
    return False
