"""The fiber algebra ``E = F[z]/(f)`` of a family point with its group action."""

from __future__ import annotations

from dataclasses import dataclass

from ..algebra.extension import embedding
from ..algebra.poly import Poly, poly_compose, poly_resultant
from .family import FamilyError, action_matrix, invariant_basis, verify_family_point


@dataclass
class EtaleAlgebra:
    base: object
    f: Poly
    gamma: object
    h: list               # h[g]: image of z under the (left) action of g
    point: object = None

    @property
    def dim(self):
        return self.f.degree

    def element(self, coeffs):
        return Poly(self.base, coeffs) % self.f

    def mul(self, a, b):
        return (a * b) % self.f

    def act(self, g, a):
        """Apply the automorphism of ``g``: ``a(z) -> a(h_g(z))``."""
        return poly_compose(a, self.h[g]) % self.f

    def matrix(self, g):
        return action_matrix(self.base, self.f, self.h[g])

    def is_separable(self):
        return not poly_resultant(self.f, self.f.derivative()).is_zero()

    def check_action(self):
        """``act(g1, act(g2, z)) == act(g1 g2, z)`` for every pair."""
        z = Poly.x(self.base) % self.f
        G = self.gamma
        bad = []
        for a in G.elements:
            for b in G.elements:
                if self.act(a, self.act(b, z)) != self.act(G.mul(a, b), z):
                    bad.append((a, b))
        return bad


def fiber_algebra(pt):
    rep = verify_family_point(pt)
    if not rep.ok:
        raise FamilyError("point fails verification:\n" + rep.summary())
    h = [pt.h[pt.ring_action_index(g)] for g in pt.gamma.elements]
    return EtaleAlgebra(pt.base, pt.f, pt.gamma, h, pt)


def invariant_subalgebra(alg):
    """Basis of ``E^Gamma`` as polynomials in ``z``."""
    vecs = invariant_basis(alg.base, alg.f, alg.h)
    return [Poly(alg.base, v) for v in vecs]


@dataclass
class TensorSplit:
    ext: object
    roots: list           # component k is evaluation at roots[k]
    permutations: list    # permutations[g][k] = component that g sends component k to

    @property
    def components(self):
        return len(self.roots)

    def is_transitive(self):
        orbit = {0}
        frontier = [0]
        while frontier:
            k = frontier.pop()
            for perm in self.permutations:
                j = perm[k]
                if j not in orbit:
                    orbit.add(j)
                    frontier.append(j)
        return len(orbit) == len(self.roots)


def _eval(poly_coeffs, value, ext):
    acc = ext.zero
    for c in reversed(poly_coeffs):
        acc = ext.add(ext.mul(acc, value), c)
    return acc


def tensor_split(alg, ext, root=None):
    """Split ``E (x)_F ext`` into copies of ``ext``, one per root of ``f``.

    Finite ``ext``: a root is found by search.  Otherwise ``root`` must be
    given, or the generator of ``ext`` is tried.  The remaining roots are the
    images ``h_g(root)``.
    """
    emb = embedding(alg.base, ext)
    fc = [emb(c) for c in alg.f.coeffs]
    if root is None:
        if ext.is_finite():
            root = next((r for r in ext.elements() if _eval(fc, r, ext) == ext.zero), None)
        else:
            root = ext.generator()
        if root is None or _eval(fc, root, ext) != ext.zero:
            raise FamilyError("f has no root in the extension; supply one")
    elif _eval(fc, root, ext) != ext.zero:
        raise FamilyError("supplied value is not a root of f")
    hs = [[emb(c) for c in h.coeffs] for h in alg.h]
    roots = []
    for g in alg.gamma.elements:
        r = _eval(hs[g], root, ext)
        if r not in roots:
            roots.append(r)
    if len(roots) != alg.dim:
        raise FamilyError("f does not split over the extension (too few distinct roots)")
    # component of root b is evaluation at b; g acts on components by b -> h_{g^{-1}}(b)
    index = {r: k for k, r in enumerate(roots)}
    G = alg.gamma
    perms = []
    for g in G.elements:
        hg = hs[G.inv(g)]
        perms.append([index[_eval(hg, r, ext)] for r in roots])
    split = TensorSplit(ext, roots, perms)
    if len(invariant_subalgebra(alg)) == 1 and not split.is_transitive():
        raise FamilyError("invariants are one-dimensional but the action is not transitive")
    return split
