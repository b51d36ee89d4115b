"""Enumeration of root data of small rank by gluing subgroups.

A root datum with semisimple type ``T`` and radical rank ``t`` sits between
``Q + Z^t`` and ``P + (1/N) Z^t`` (``N`` the exponent of ``P/Q``).  It is the
preimage of a subgroup ``C`` of ``G = P/Q x (Z/N)^t`` meeting ``0 x (Z/N)^t``
trivially.  Two subgroups give isomorphic data exactly when they are related
by a diagram automorphism and an element of ``GL_t(Z)`` acting mod ``N``.
"""

from __future__ import annotations

import functools
import itertools
from collections import deque
from fractions import Fraction
from math import lcm

from ..algebra.intmatrix import IntMatrix, hermite_normal_form, rational_inverse
from .cartan import (TYPES_BY_RANK, diagram_automorphisms, identify_type, matching_permutations,
                     pairing_matrix, root_system, type_name)
from .datum import (BasedRootDatum, RootDatum, RootDatumError, _solve_in_basis, pair,
                    unimodular_solve, validate_root_datum)

MAX_ENUMERATION_RANK = 3


class _TypeContext:
    """Precomputed data for one (Cartan type, torus rank) pair."""

    def __init__(self, components, t):
        self.components = tuple(components)
        self.t = t
        A = pairing_matrix(components)
        self.A = A
        self.s = len(A)
        self.roots, self.coroots = root_system(A) if A else ([], [])
        if A:
            from ..algebra.intmatrix import smith_normal_form
            U, D, V = smith_normal_form(A)
            diag = D.diagonal()
            self.keep = [i for i, d in enumerate(diag) if d != 1]
            self.ds = [diag[i] for i in self.keep]
            self.V = V
            self.Vinv = V.inverse()
        else:
            self.keep, self.ds, self.V, self.Vinv = [], [], None, None
        self.N = lcm(*self.ds) if self.ds else 1
        self.moduli = tuple(self.ds) + (self.N,) * t
        self.diagram = diagram_automorphisms(A) if A else [()]

    # P/Q coordinates

    def pq_coords(self, w):
        if not self.ds:
            return ()
        y = [sum(w[k] * self.V[k, j] for k in range(self.s)) for j in range(self.s)]
        return tuple(y[i] % d for i, d in zip(self.keep, self.ds))

    def pq_lift(self, k):
        y = [0] * self.s
        for i, v in zip(self.keep, k):
            y[i] = v
        return [sum(y[j] * self.Vinv[j, c] for j in range(self.s)) for c in range(self.s)]

    # group of G = P/Q x (Z/N)^t

    def elements(self):
        return list(itertools.product(*[range(m) for m in self.moduli]))

    def add(self, a, b):
        return tuple((x + y) % m for x, y, m in zip(a, b, self.moduli))

    def closure(self, gens):
        zero = tuple(0 for _ in self.moduli)
        seen = {zero}
        queue = deque([zero])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = self.add(x, g)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def admissible(self, C):
        npq = len(self.ds)
        return all(any(c[:npq]) or not any(c[npq:]) for c in C)

    def subgroups(self):
        zero = self.closure([])
        found = {zero}
        frontier = [zero]
        elems = self.elements()
        while frontier:
            nxt = []
            for S in frontier:
                for g in elems:
                    if g in S:
                        continue
                    T = self.closure(list(S) + [g])
                    if T not in found:
                        found.add(T)
                        nxt.append(T)
            frontier = nxt
        return [S for S in found if self.admissible(S)]

    @functools.cached_property
    def symmetries(self):
        """Maps ``G -> G`` induced by diagram automorphisms and ``GL_t(Z)`` mod ``N``."""
        maps = []
        npq = len(self.ds)
        gls = _gl_mod(self.t, self.N)
        for p in self.diagram:
            def pq_map(k, p=p):
                w = self.pq_lift(k)
                w2 = [0] * self.s
                for i in range(self.s):
                    w2[p[i]] = w[i]
                return self.pq_coords(w2)
            pq_table = {k: pq_map(k) for k in itertools.product(*[range(d) for d in self.ds])}
            for g in gls:
                def f(x, pq_table=pq_table, g=g):
                    v = x[npq:]
                    gv = tuple(sum(v[k] * g[k][j] for k in range(self.t)) % self.N
                               for j in range(self.t))
                    return pq_table[x[:npq]] + gv
                maps.append(f)
        return maps

    def canonical(self, C):
        return min(tuple(sorted(f(c) for c in C)) for f in self.symmetries)

    # construction

    def build(self, C):
        s, t, N = self.s, self.t, self.N
        n = s + t
        gens = []
        for row in self.A:
            gens.append(list(row) + [0] * t)
        for k in range(t):
            gens.append([0] * s + [N * int(k == j) for j in range(t)])
        npq = len(self.ds)
        for c in C:
            gens.append(self.pq_lift(c[:npq]) + list(c[npq:]))
        B = hermite_normal_form(gens) if gens else []
        if len(B) != n:
            raise RootDatumError("gluing lattice has wrong rank")
        Binv = rational_inverse(B)
        roots = []
        for r in self.roots:
            w = list(r) + [0] * t
            x = [sum(Fraction(w[k]) * Binv[k][j] for k in range(n)) for j in range(n)]
            if any(v.denominator != 1 for v in x):
                raise RootDatumError("root outside the lattice")
            roots.append(tuple(int(v) for v in x))
        coroots = [tuple(sum(cv[j] * B[k][j] for j in range(s)) for k in range(n))
                   for cv in self.coroots]
        d = RootDatum(n, roots, coroots)
        b = BasedRootDatum(d, tuple(range(s)))
        return b.canonical()


def _gl_mod(t, N):
    """Matrices over ``Z/N`` with determinant ``+-1`` (the image of ``GL_t(Z)``)."""
    if t == 0:
        return [()]
    if N == 1:
        return [tuple(tuple(int(i == j) for j in range(t)) for i in range(t))]
    out = []
    for entries in itertools.product(range(N), repeat=t * t):
        g = tuple(tuple(entries[i * t:(i + 1) * t]) for i in range(t))
        dt = IntMatrix(g).det() % N
        if dt in (1 % N, (-1) % N):
            out.append(g)
    return out


@functools.lru_cache(maxsize=None)
def _context(components, t):
    return _TypeContext(components, t)


def enumerate_root_data(n):
    """One based root datum per isomorphism class of rank exactly ``n``."""
    if n < 0:
        raise RootDatumError("rank must be nonnegative")
    if n > MAX_ENUMERATION_RANK:
        raise RootDatumError(f"enumeration is supported up to rank {MAX_ENUMERATION_RANK}")
    out = []
    for s in range(0, n + 1):
        for comps in TYPES_BY_RANK[s]:
            ctx = _context(comps, n - s)
            # the canonical key is itself an orbit representative
            reps = {ctx.canonical(C) for C in ctx.subgroups()}
            for key in sorted(reps, key=lambda k: (-len(k), k)):
                b = ctx.build(key)
                name = standard_name(b, comps, n - s, key)
                out.append(BasedRootDatum(b.datum, b.base, name))
    # generic labels may collide; suffix them in enumeration order
    counts = {}
    for b in out:
        counts[b.name] = counts.get(b.name, 0) + 1
    seen = {}
    for i, b in enumerate(out):
        if counts[b.name] > 1:
            seen[b.name] = seen.get(b.name, 0) + 1
            out[i] = BasedRootDatum(b.datum, b.base, f"{b.name}{chr(96 + seen[b.name])}")
    return out


def gluing_invariant(b):
    """Complete isomorphism invariant ``(type, t, canonical gluing subgroup)``."""
    d = b.datum
    A = b.cartan_pairs()
    if A:
        comps, p = identify_type(A)
    else:
        comps, p = (), ()
    s = len(A)
    t = d.rank - s
    ctx = _context(tuple(comps), t)
    rad = d.radical()
    if len(rad) != t:
        raise RootDatumError("radical rank mismatch")
    basis = list(b.simple_roots) + [list(r) for r in rad]
    gens = []
    for k in range(d.rank):
        x = [int(k == j) for j in range(d.rank)]
        w = [0] * s
        for i, cv in enumerate(b.simple_coroots):
            w[p[i]] = pair(x, cv)
        coeffs = _solve_in_basis(basis, x)
        tor = [c * ctx.N for c in coeffs[s:]]
        if any(v.denominator != 1 for v in tor):
            raise RootDatumError("radical coordinates exceed the expected denominators")
        gens.append(ctx.pq_coords(w) + tuple(int(v) % ctx.N for v in tor))
    C = ctx.closure(gens)
    return (tuple(comps), t, ctx.canonical(C))


def is_isomorphic(b1, b2):
    if b1.rank != b2.rank or len(b1.datum.roots) != len(b2.datum.roots):
        return False
    return gluing_invariant(b1) == gluing_invariant(b2)


def maps_datum_onto(d1, d2, M):
    """Does ``x -> x @ M`` carry roots to roots and coroots compatibly?"""
    img = d1.apply(M)
    return dict(zip(img.roots, img.coroots)) == dict(zip(d2.roots, d2.coroots))


def _gl_lifts(t, N):
    """Integer lifts in ``GL_t(Z)`` of every residue class mod ``N`` of determinant ``+-1``."""
    ident = tuple(tuple(int(i == j) for j in range(t)) for i in range(t))
    if t == 0 or N == 1:
        return [ident]
    gens = []
    for i in range(t):
        d = [list(r) for r in ident]
        d[i][i] = -1
        gens.append(tuple(map(tuple, d)))
        for j in range(t):
            if i != j:
                e = [list(r) for r in ident]
                e[i][j] = 1
                gens.append(tuple(map(tuple, e)))
    target = len(_gl_mod(t, N))
    lifts = {}
    queue = deque([ident])
    seen = {ident}
    while queue and len(lifts) < target:
        g = queue.popleft()
        key = tuple(tuple(x % N for x in row) for row in g)
        lifts.setdefault(key, g)
        for h in gens:
            gh = tuple(tuple(sum(g[i][k] * h[k][j] for k in range(t)) for j in range(t))
                       for i in range(t))
            if gh not in seen:
                seen.add(gh)
                queue.append(gh)
    return list(lifts.values())


def find_isomorphism(b1, b2):
    """An ``IntMatrix`` ``M`` with ``x -> x @ M`` an isomorphism ``b1 -> b2``, or ``None``.

    The map sends the base of ``b1`` onto the base of ``b2``.
    """
    d1, d2 = b1.datum, b2.datum
    if d1.rank != d2.rank or len(d1.roots) != len(d2.roots):
        return None
    A1, A2 = b1.cartan_pairs(), b2.cartan_pairs()
    perms = matching_permutations(A1, A2) if A1 else [()]
    rad1, rad2 = d1.radical(), d2.radical()
    t = len(rad1)
    if len(rad2) != t:
        return None
    N = 1
    if A1:
        N = _context(identify_type(A1)[0], t).N
    src = [list(r) for r in b1.simple_roots] + [list(r) for r in rad1]
    for p in perms:
        simple_dst = [list(b2.simple_roots[p[i]]) for i in range(len(p))]
        for g in _gl_lifts(t, N):
            rad_dst = [[sum(g[i][k] * rad2[k][j] for k in range(t)) for j in range(d1.rank)]
                       for i in range(t)]
            M = unimodular_solve(src, simple_dst + rad_dst)
            if M is not None and maps_datum_onto(d1, d2, M):
                return M
    return None


# names for the classes of rank <= 2

def standard_name(b, comps, t, key):
    from .named import name_for
    return name_for(comps, t, key, b)


def enumerate_all(n):
    """Root data of every rank ``<= n``."""
    out = []
    for r in range(n + 1):
        out.extend(enumerate_root_data(r))
    return out


def check_enumeration(n):
    """Validate and pairwise-compare the enumeration; returns a list of problems."""
    data = enumerate_root_data(n)
    problems = []
    for b in data:
        rep = b.validate()
        if not rep:
            problems.append((b.name, rep.failures))
    keys = [gluing_invariant(b) for b in data]
    if len(set(keys)) != len(keys):
        problems.append(("duplicates", keys))
    return problems


__all__ = ["enumerate_root_data", "enumerate_all", "gluing_invariant",
           "is_isomorphic", "find_isomorphism", "maps_datum_onto", "validate_root_datum",
           "type_name", "check_enumeration"]
