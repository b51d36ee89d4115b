"""Based automorphism groups ``Aut(X, Delta)`` and finite subgroups of ``GL_2(Z)``.

A based automorphism permutes the simple roots and acts on the radical
``X_rad`` (characters killed by every coroot).  When ``X_rad`` has rank at
most one the group is finite and is computed here; rank two only occurs for
the split torus of rank two, whose finite subgroups are listed by hand.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..algebra.intmatrix import IntMatrix
from ..groups.finite_group import FiniteGroup, group_from_generators
from .cartan import diagram_automorphisms
from .datum import RootDatumError, unimodular_solve
from .enumerate import maps_datum_onto


class InfiniteAutomorphismGroup(RootDatumError):
    pass


@dataclass(frozen=True)
class BasedAut:
    """``x -> x @ matrix``; ``base_permutation[i] = j`` when simple root ``i`` goes to ``j``."""

    matrix: IntMatrix
    base_permutation: tuple

    def is_identity(self):
        return self.matrix == IntMatrix.identity(self.matrix.rows)

    def compose(self, other):
        """``self`` after ``other``."""
        perm = tuple(self.base_permutation[other.base_permutation[i]]
                     for i in range(len(self.base_permutation)))
        return BasedAut(other.matrix @ self.matrix, perm)

    def to_json(self):
        return {"matrix": self.matrix.tolist(), "base_permutation": list(self.base_permutation)}


@dataclass
class AutomorphismGroup:
    elements: list      # BasedAut, identity first
    group: FiniteGroup  # table with mul(a, b) = elements[a] after elements[b]

    @property
    def order(self):
        return len(self.elements)

    def index(self, aut):
        for i, a in enumerate(self.elements):
            if a.matrix == aut.matrix:
                return i
        raise KeyError("not an element of the group")


def based_automorphism_group(b):
    """The finite group ``Aut(X, Delta)`` of a based root datum."""
    d = b.datum
    rad = d.radical()
    t = len(rad)
    if t >= 2:
        raise InfiniteAutomorphismGroup(
            f"radical of rank {t}: Aut(X, Delta) is infinite; "
            "use gl2z_finite_subgroups() for the rank-2 torus")
    A = b.cartan_pairs()
    perms = diagram_automorphisms(A) if A else [()]
    src = [list(r) for r in b.simple_roots] + [list(r) for r in rad]
    auts = []
    for p in perms:
        dst = [list(b.simple_roots[p[i]]) for i in range(len(p))]
        for eps in ((1,) if t == 0 else (1, -1)):
            dst_rad = [[eps * x for x in r] for r in rad]
            M = unimodular_solve(src, dst + dst_rad)
            if M is not None and maps_datum_onto(d, d, M):
                auts.append(BasedAut(M, tuple(p)))
    auts.sort(key=lambda a: (not a.is_identity(), a.matrix.entries))
    return _as_group(auts)


def _as_group(auts):
    index = {a.matrix: i for i, a in enumerate(auts)}
    table = [[index[(b.matrix @ a.matrix)] for b in auts] for a in auts]
    return AutomorphismGroup(auts, FiniteGroup(table, [str(a.matrix.tolist()) for a in auts]))


def matrix_group(matrices):
    """Group generated by integer matrices acting as ``x -> x @ M``, as an AutomorphismGroup."""
    n = matrices[0].rows
    ident = IntMatrix.identity(n)
    # mul(a, b) is "a after b", i.e. b @ a
    table, elems = group_from_generators(list(matrices), lambda a, b: b @ a, ident)
    auts = [BasedAut(m, ()) for m in elems]
    return AutomorphismGroup(auts, table)


def _m(rows):
    return IntMatrix(rows)


def gl2z_finite_subgroups():
    """Representatives of the 13 conjugacy classes of finite subgroups of ``GL_2(Z)``."""
    I = _m([[1, 0], [0, 1]])
    minus = _m([[-1, 0], [0, -1]])
    p = _m([[1, 0], [0, -1]])
    c = _m([[0, 1], [1, 0]])
    c2 = _m([[0, -1], [-1, 0]])
    r4 = _m([[0, -1], [1, 0]])
    r3 = _m([[0, -1], [1, -1]])
    r6 = _m([[1, -1], [1, 0]])
    gens = {
        "C1": [I], "C2": [minus], "C2p": [p], "C2c": [c], "C3": [r3], "C4": [r4],
        "D2p": [minus, p], "D2c": [minus, c], "C6": [r6], "D3p": [r3, c2], "D3c": [r3, c],
        "D4": [r4, p], "D6": [r6, c],
    }
    return {name: matrix_group(g) for name, g in gens.items()}


def _intertwiners(rho1, rho2):
    """Integer matrices ``g`` with ``rho1[i] @ g == g @ rho2[i]`` for every ``i``."""
    from ..algebra.intmatrix import integer_kernel
    eqs = []
    for A, B in zip(rho1, rho2):
        # (A g - g B)[r][s] = sum_k A[r][k] g[k][s] - g[r][k] B[k][s]
        for r in range(2):
            for s in range(2):
                row = [0] * 4
                for k in range(2):
                    row[k * 2 + s] += A[r, k]
                    row[r * 2 + k] -= B[k, s]
                eqs.append(row)
    if not any(any(r) for r in eqs):
        return [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    return integer_kernel(eqs)


def conjugating_matrix(rho1, rho2, bound=3):
    """``g`` in ``GL_2(Z)`` with ``g^{-1} rho1 g == rho2`` (bounded search), or ``None``."""
    basis = _intertwiners(rho1, rho2)
    if not basis:
        return None
    for coeffs in itertools.product(range(-bound, bound + 1), repeat=len(basis)):
        v = [sum(c * b[i] for c, b in zip(coeffs, basis)) for i in range(4)]
        if v[0] * v[3] - v[1] * v[2] in (1, -1):
            return _m([[v[0], v[1]], [v[2], v[3]]])
    return None


def torus_rank2_hom_classes(gamma):
    """Homomorphisms ``gamma -> GL_2(Z)`` up to conjugacy, as tuples of matrices.

    Every finite subgroup of ``GL_2(Z)`` is conjugate into ``D4`` or ``D6``, so
    homomorphisms into those two are collected and deduplicated by searching
    for an integral intertwiner.
    """
    from ..groups.cohomology import all_homomorphisms
    subs = gl2z_finite_subgroups()
    cands = []
    for name in ("D4", "D6"):
        H = subs[name]
        for h in all_homomorphisms(gamma, H.group):
            cands.append(tuple(H.elements[i].matrix for i in h))
    gens = gamma.generators()
    reps = []
    for rho in cands:
        if any(_conjugate(rho, r, gens) for r in reps):
            continue
        reps.append(rho)
    return reps


def _conjugate(rho1, rho2, gens):
    if any(rho1[g].det() != rho2[g].det() for g in gens):
        return False
    if any(_trace(rho1[g]) != _trace(rho2[g]) for g in gens):
        return False
    return conjugating_matrix([rho1[g] for g in gens], [rho2[g] for g in gens]) is not None


def _trace(M):
    return sum(M[i, i] for i in range(M.rows))
