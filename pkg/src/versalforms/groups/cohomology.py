"""Homomorphism classes and nonabelian 1-cocycles of finite groups.

Conventions: a 1-cocycle satisfies ``c(st) = c(s) * (s . c(t))``; two cocycles
are cohomologous when ``c1(g) = phi^{-1} * c2(g) * (g . phi)`` for some
``phi``.  The coefficient group may be a :class:`FiniteGroup` or any object with
``elements``, ``identity``, ``mul`` and ``inv`` (hashable elements).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .finite_group import FiniteGroup, GroupError, extend_hom

SEARCH_LIMIT = 10 ** 6


class GroupAction:
    """Action of ``actor`` (a FiniteGroup) on ``target`` by automorphisms.

    ``maps`` is either a dict/list giving, per actor element, a permutation of
    the target's elements (for FiniteGroup targets, a list of indices), or a
    callable ``act(g, x)``.
    """

    def __init__(self, actor, target, maps=None, check=True):
        self.actor = actor
        self.target = target
        if maps is None:
            self._act = lambda g, x: x
            self.trivial = True
        elif callable(maps):
            self._act = maps
            self.trivial = False
        else:
            perms = [list(maps[g]) for g in actor.elements]
            self._act = lambda g, x: perms[g][x]
            self.trivial = all(p == list(range(len(p))) for p in perms)
        if check:
            self.validate()

    def __call__(self, g, x):
        return self._act(g, x)

    @classmethod
    def from_generators(cls, actor, target, gen_images):
        """Extend an action given on generators of ``actor`` (FiniteGroup target).

        ``gen_images`` maps each generator to an index permutation of ``target``.
        """
        gens = list(gen_images)
        tree, order = actor.words(gens)
        perms = {0: list(range(target.order))}
        for x in order[1:]:
            parent, g = tree[x]
            perms[x] = [perms[parent][gen_images[g][t]] for t in range(target.order)]
        return cls(actor, target, [perms[g] for g in actor.elements])

    def validate(self):
        A, T = self.actor, self.target
        elems = list(T.elements)
        if len(elems) * A.order > 2 * 10 ** 5:
            sample = elems[:: max(1, len(elems) // 200)]
        else:
            sample = elems
        for x in sample:
            if self._act(A.identity, x) != x:
                raise GroupError("identity does not act trivially")
        gens = A.generators()
        for g in gens:
            for x in sample:
                for y in sample[:50]:
                    if self._act(g, T.mul(x, y)) != T.mul(self._act(g, x), self._act(g, y)):
                        raise GroupError("actor does not act by homomorphisms")
        for a in A.elements:
            for g in gens:
                ag = A.mul(a, g)
                for x in sample[:50]:
                    if self._act(ag, x) != self._act(a, self._act(g, x)):
                        raise GroupError("action is not a group homomorphism")


@dataclass(frozen=True)
class Cocycle:
    gamma: FiniteGroup
    coefficients: object
    action: GroupAction
    values: tuple

    def __call__(self, g):
        return self.values[g]

    def defect(self):
        """First pair ``(s, t)`` violating the cocycle identity, or ``None``."""
        G, A, act = self.gamma, self.coefficients, self.action
        c = self.values
        if c[G.identity] != A.identity:
            return (G.identity, G.identity)
        for s in G.elements:
            for t in G.elements:
                if c[G.mul(s, t)] != A.mul(c[s], act(s, c[t])):
                    return (s, t)
        return None

    def is_cocycle(self):
        return self.defect() is None

    def twist_by(self, phi):
        """The cohomologous cocycle ``g -> phi^{-1} c(g) (g . phi)``."""
        A, act = self.coefficients, self.action
        pinv = A.inv(phi)
        vals = tuple(A.mul(A.mul(pinv, self.values[g]), act(g, phi)) for g in self.gamma.elements)
        return Cocycle(self.gamma, A, act, vals)

    def to_json(self, group_id=None):
        return {"group": group_id if group_id is not None else getattr(self.gamma, "id", None),
                "values": [v if isinstance(v, int) else str(v) for v in self.values]}


def trivial_cocycle(gamma, coefficients, action):
    return Cocycle(gamma, coefficients, action,
                   tuple(coefficients.identity for _ in gamma.elements))


# homomorphisms


def all_homomorphisms(source, target):
    """Every homomorphism ``source -> target`` as a tuple of target elements."""
    gens = source.generators()
    tree, order = source.words(gens)
    tgt = list(target.elements)
    order_of = lambda x: _order(target, x)
    cands = []
    for g in gens:
        k = source.element_order(g)
        cands.append([x for x in tgt if k % order_of(x) == 0])
    out = []
    for images in itertools.product(*cands):
        phi = extend_hom(source, target, gens, images, tree, order)
        if phi is not None:
            out.append(tuple(phi))
    return out


def _order(G, x):
    if isinstance(G, FiniteGroup):
        return G.element_order(x)
    n, y = 1, x
    while y != G.identity:
        y = G.mul(y, x)
        n += 1
    return n


@dataclass
class HomClass:
    representative: tuple
    members: list = field(default_factory=list)
    # witnesses[i] = t with members[i] = t * representative * t^{-1}
    witnesses: list = field(default_factory=list)


def hom_classes(source, target, with_members=False):
    """Representatives of ``Hom(source, target)`` modulo conjugation in ``target``."""
    homs = all_homomorphisms(source, target)
    seen = {}
    classes = []
    tgt = list(target.elements)
    for h in homs:
        if h in seen:
            continue
        cls = HomClass(h)
        for t in tgt:
            tinv = target.inv(t)
            conj = tuple(target.mul(target.mul(t, x), tinv) for x in h)
            if conj not in seen:
                seen[conj] = len(classes)
                cls.members.append(conj)
                cls.witnesses.append(t)
        classes.append(cls)
    if with_members:
        return classes
    return [c.representative for c in classes]


# cocycles


def _generator_candidates(gamma, A, act, g):
    """Values ``a`` with ``a (g.a) (g^2.a) ... (g^{k-1}.a) = 1`` where ``k = ord(g)``."""
    k = gamma.element_order(g)
    out = []
    for a in A.elements:
        acc = a
        gp = g
        for _ in range(k - 1):
            acc = A.mul(acc, act(gp, a))
            gp = gamma.mul(gp, g)
        if acc == A.identity:
            out.append(a)
    return out


def z1_cocycles(gamma, coefficients, action, limit=SEARCH_LIMIT):
    """All 1-cocycles ``gamma -> coefficients`` for the given action.

    Values are chosen on a greedy generating set (pre-filtered by the order
    relation of each generator), propagated along a spanning tree, and the
    cocycle identity is then checked against every generator.
    """
    G, A, act = gamma, coefficients, action
    gens = G.generators()
    tree, order = G.words(gens)
    cands = [_generator_candidates(G, A, act, g) for g in gens]
    size = 1
    for c in cands:
        size *= len(c)
    if size > limit:
        raise GroupError(f"cocycle search space {size} exceeds limit {limit}")
    out = []
    n = G.order
    for images in itertools.product(*cands):
        img = dict(zip(gens, images))
        c = [None] * n
        c[G.identity] = A.identity
        for x in order[1:]:
            parent, g = tree[x]
            c[x] = A.mul(c[parent], act(parent, img[g]))
        ok = True
        for x in G.elements:
            for g in gens:
                if c[G.mul(x, g)] != A.mul(c[x], act(x, img[g])):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(Cocycle(G, A, act, tuple(c)))
    return out


@dataclass
class CohomologyClass:
    representative: Cocycle
    members: list = field(default_factory=list)
    # witnesses[i] = phi with members[i] = representative.twist_by(phi)
    witnesses: list = field(default_factory=list)


def h1_classes(cocycles):
    """Partition ``cocycles`` into cohomology classes, with coboundary witnesses."""
    cocycles = list(cocycles)
    if not cocycles:
        return []
    first = cocycles[0]
    for c in cocycles:
        if c.gamma is not first.gamma and c.gamma != first.gamma:
            raise GroupError("cocycles over different groups")
        if c.coefficients is not first.coefficients or c.action is not first.action:
            raise GroupError("cocycles with different coefficients or actions")
    assigned = {}
    classes = []
    for c in cocycles:
        if c.values in assigned:
            continue
        orbit = {}
        for phi in c.coefficients.elements:
            vals = c.twist_by(phi).values
            orbit.setdefault(vals, phi)
        cls = CohomologyClass(c)
        idx = len(classes)
        for d in cocycles:
            if d.values in orbit and d.values not in assigned:
                assigned[d.values] = idx
                cls.members.append(d)
                cls.witnesses.append(orbit[d.values])
        classes.append(cls)
    return classes


def are_cohomologous(c1, c2):
    """A witness ``phi`` with ``c1 = c2.twist_by(phi)``, or ``None``."""
    for phi in c2.coefficients.elements:
        if c2.twist_by(phi).values == c1.values:
            return phi
    return None
