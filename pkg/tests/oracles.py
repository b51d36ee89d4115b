"""Brute-force reference computations, written independently of the library code."""

import itertools
from fractions import Fraction


# root data in rank <= 2, as frozensets of (root, coroot) pairs

def _pair(a, b):
    return sum(x * y for x, y in zip(a, b))


def _reflect(x, r, c):
    k = _pair(x, c)
    return tuple(xi - k * ri for xi, ri in zip(x, r))


def _weyl_closure(simple, cosimple):
    roots = dict(zip(simple, cosimple))
    frontier = list(roots)
    while frontier:
        new = []
        for r in frontier:
            c = roots[r]
            for s, sc in zip(simple, cosimple):
                r2, c2 = _reflect(r, s, sc), _reflect(c, sc, s)
                if r2 not in roots:
                    roots[r2] = c2
                    new.append(r2)
                elif roots[r2] != c2:
                    return None
        frontier = new
        if len(roots) > 12:
            return None
    return roots


RANK2_CARTAN = {"A1xA1": [[2, 0], [0, 2]], "A2": [[2, -1], [-1, 2]],
                "B2": [[2, -2], [-1, 2]], "G2": [[2, -1], [-3, 2]]}


def rank2_candidates(box=2):
    """Root data on Z^2 from small simple roots and every rank-2 Cartan matrix."""
    rng = range(-box, box + 1)
    vecs = [v for v in itertools.product(rng, repeat=2) if v != (0, 0)]
    cands = {frozenset()}
    for a in vecs:
        for c in vecs:
            if _pair(a, c) == 2:
                na, nc = tuple(-x for x in a), tuple(-x for x in c)
                cands.add(frozenset({(a, c), (na, nc)}))
    for A in RANK2_CARTAN.values():
        for a1 in vecs:
            for a2 in vecs:
                det = a1[0] * a2[1] - a1[1] * a2[0]
                if det == 0:
                    continue
                cs = []
                for j in range(2):
                    x = Fraction(A[0][j] * a2[1] - A[1][j] * a1[1], det)
                    y = Fraction(a1[0] * A[1][j] - a2[0] * A[0][j], det)
                    if x.denominator != 1 or y.denominator != 1:
                        break
                    cs.append((int(x), int(y)))
                else:
                    R = _weyl_closure([a1, a2], cs)
                    if R:
                        cands.add(frozenset(R.items()))
    return cands


def rank1_candidates(box=3):
    cands = {frozenset()}
    for a in range(-box, box + 1):
        for c in range(-box, box + 1):
            if a * c == 2:
                cands.add(frozenset({((a,), (c,)), ((-a,), (-c,))}))
    return cands


def small_unimodular(n, bound=3):
    rng = range(-bound, bound + 1)
    out = []
    for entries in itertools.product(rng, repeat=n * n):
        M = [list(entries[i * n:(i + 1) * n]) for i in range(n)]
        if abs(_det(M)) == 1:
            out.append(M)
    return out


def _det(M):
    if len(M) == 1:
        return M[0][0]
    return sum((-1) ** j * M[0][j] * _det([row[:j] + row[j + 1:] for row in M[1:]])
               for j in range(len(M)))


def _inverse_int(M):
    n = len(M)
    d = _det(M)
    adj = [[(-1) ** (i + j) * _det([r[:i] + r[i + 1:] for k, r in enumerate(M) if k != j])
            if n > 1 else 1 for j in range(n)] for i in range(n)]
    return [[adj[i][j] * d for j in range(n)] for i in range(n)]  # d = +-1


def brute_isomorphic(d1, d2, matrices):
    """``x -> x @ M`` maps roots to roots and ``c -> M^{-1} c`` maps coroots along."""
    if len(d1) != len(d2):
        return False
    roots2 = dict(d2)
    for M in matrices:
        n = len(M)
        Minv = _inverse_int(M)
        ok = True
        for r, c in d1:
            r2 = tuple(sum(r[k] * M[k][j] for k in range(n)) for j in range(n))
            c2 = tuple(sum(Minv[i][k] * c[k] for k in range(n)) for i in range(n))
            if roots2.get(r2) != c2:
                ok = False
                break
        if ok:
            return True
    return False


def count_classes(cands, n):
    mats = small_unimodular(n)
    reps = []
    for d in sorted(cands, key=lambda s: sorted(s)):
        if not any(brute_isomorphic(d, r, mats) for r in reps):
            reps.append(d)
    return reps


def as_pairs(b):
    """A BasedRootDatum as a frozenset of (root, coroot) pairs."""
    d = b.datum
    return frozenset((tuple(r), tuple(c)) for r, c in zip(d.roots, d.coroots))


# groups: all multiplication tables of a given order, by backtracking

def group_tables(n):
    """Every associative Latin square with identity 0 (row/column 0 fixed)."""
    T = [[None] * n for _ in range(n)]
    for i in range(n):
        T[0][i] = i
        T[i][0] = i
    cells = [(i, j) for i in range(1, n) for j in range(1, n)]
    out = []

    def consistent():
        for a in range(n):
            for b in range(n):
                ab = T[a][b]
                if ab is None:
                    continue
                for c in range(n):
                    bc = T[b][c]
                    if bc is None:
                        continue
                    l, r = T[ab][c], T[a][bc]
                    if l is not None and r is not None and l != r:
                        return False
        return True

    def fill(k):
        if k == len(cells):
            out.append([row[:] for row in T])
            return
        i, j = cells[k]
        used_row = set(T[i])
        used_col = {T[r][j] for r in range(n)}
        for v in range(n):
            if v in used_row or v in used_col:
                continue
            T[i][j] = v
            if consistent():
                fill(k + 1)
            T[i][j] = None

    fill(0)
    return out


# cocycles by exhaustion

def all_cocycles(gamma, A, act):
    """Every function gamma -> A satisfying the cocycle identity."""
    elems = list(A.elements)
    out = []
    for vals in itertools.product(elems, repeat=gamma.order):
        if vals[gamma.identity] != A.identity:
            continue
        if all(vals[gamma.mul(s, t)] == A.mul(vals[s], act(s, vals[t]))
               for s in gamma.elements for t in gamma.elements):
            out.append(tuple(vals))
    return out


# finite fields by hand

def norm_by_conjugates(F4, a):
    """Norm F4/F2 as a * a^2."""
    return F4.mul(a, F4.mul(a, a))


def inversion_action(gamma, A):
    from versalforms.groups import GroupAction
    perm = [A.inv(a) for a in A.elements]
    return GroupAction.from_generators(gamma, A, {g: perm for g in gamma.generators()})


def _conjugation_by_generator(gamma, A, t):
    """gamma cyclic acting on A through conjugation by t (t^|gamma| central enough)."""
    from versalforms.groups import GroupAction
    perm = [A.mul(A.mul(t, a), A.inv(t)) for a in A.elements]
    return GroupAction.from_generators(gamma, A, {gamma.generators()[0]: perm})


def cocycle_instances():
    """Named (gamma, A, action) instances with search space at most 10^6."""
    from versalforms.groups import GroupAction, cyclic_group, group_by_id, symmetric_group
    C2, C3, C4 = cyclic_group(2), cyclic_group(3), cyclic_group(4)
    S3, Q8 = symmetric_group(3), group_by_id("Q8")
    yield "C2 triv C2", C2, C2, GroupAction(C2, C2)
    yield "C2 inv C3", C2, C3, inversion_action(C2, C3)
    yield "C2 inv C4", C2, C4, inversion_action(C2, C4)
    yield "C2 triv S3", C2, S3, GroupAction(C2, S3)
    yield "C3 triv S3", C3, S3, GroupAction(C3, S3)
    yield "C2 triv Q8", C2, Q8, GroupAction(C2, Q8)
    yield "C2^2 triv C2", group_by_id("C2xC2"), C2, GroupAction(group_by_id("C2xC2"), C2)
    yield "C2 conj S3", C2, S3, _conjugation_by_generator(C2, S3, 1 if S3.element_order(1) == 2
                                                          else next(x for x in S3.elements
                                                                    if S3.element_order(x) == 2))
    yield "S3 triv C2", S3, C2, GroupAction(S3, C2)
