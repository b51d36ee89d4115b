"""Root data on ``X = Z^r`` with the standard pairing against ``X^v = Z^r``.

Roots and coroots are integer row vectors; ``roots[i]`` is paired with
``coroots[i]``.  Lattice maps act on row vectors from the right: ``f(x) = x @ M``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..algebra.intmatrix import IntMatrix, rational_inverse


class RootDatumError(ValueError):
    pass


def pair(x, y):
    return sum(a * b for a, b in zip(x, y))


def _neg(v):
    return tuple(-a for a in v)


def reflect(x, root, coroot):
    """``s(x) = x - <x, coroot> root``."""
    k = pair(x, coroot)
    return tuple(a - k * b for a, b in zip(x, root))


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    failures: tuple = ()

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class RootDatum:
    rank: int
    roots: tuple
    coroots: tuple

    def __post_init__(self):
        roots = tuple(tuple(int(a) for a in r) for r in self.roots)
        coroots = tuple(tuple(int(a) for a in r) for r in self.coroots)
        if len(roots) != len(coroots):
            raise RootDatumError("roots and coroots differ in number")
        if any(len(v) != self.rank for v in roots + coroots):
            raise RootDatumError("vector length does not match rank")
        object.__setattr__(self, "roots", roots)
        object.__setattr__(self, "coroots", coroots)

    def canonical(self):
        """Same datum with roots sorted lexicographically (coroots follow)."""
        order = sorted(range(len(self.roots)), key=lambda i: self.roots[i])
        return RootDatum(self.rank, [self.roots[i] for i in order],
                         [self.coroots[i] for i in order]), order

    @property
    def semisimple_rank(self):
        if not self.roots:
            return 0
        from ..algebra.linalg import rank
        from ..algebra.fields import QQ
        return rank([[Fraction(a) for a in r] for r in self.roots], QQ)

    def coroot_of(self, root):
        return self.coroots[self.roots.index(tuple(root))]

    def radical(self):
        """Basis of ``{x in X : <x, a^v> = 0 for all coroots}``."""
        from ..algebra.intmatrix import integer_kernel
        if not self.coroots:
            return [tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)]
        return [tuple(v) for v in integer_kernel([list(c) for c in self.coroots])]

    def apply(self, M):
        """Image of the datum under the lattice automorphism ``x -> x @ M``."""
        M = M if isinstance(M, IntMatrix) else IntMatrix(M)
        Minv_T = M.inverse().transpose()
        roots = [_rowmul(r, M) for r in self.roots]
        coroots = [_rowmul(c, Minv_T) for c in self.coroots]
        return RootDatum(self.rank, roots, coroots)

    def to_json(self):
        return {"rank": self.rank, "roots": [list(r) for r in self.roots],
                "coroots": [list(c) for c in self.coroots]}


def _rowmul(v, M):
    return tuple(sum(v[k] * M[k, j] for k in range(M.rows)) for j in range(M.cols))


def validate_root_datum(d):
    """Check the root datum axioms; returns a :class:`ValidationReport`."""
    fails = []
    roots, coroots = d.roots, d.coroots
    root_set = set(roots)
    if len(root_set) != len(roots):
        fails.append("duplicate roots")
    if len(set(coroots)) != len(coroots):
        fails.append("duplicate coroots")
    if any(all(a == 0 for a in r) for r in roots):
        fails.append("zero root")
    index = {r: i for i, r in enumerate(roots)}
    for i, (a, av) in enumerate(zip(roots, coroots)):
        if pair(a, av) != 2:
            fails.append(f"pairing <root {i}, coroot {i}> = {pair(a, av)} != 2")
            continue
        if _neg(a) not in root_set:
            fails.append(f"root {i} has no negative")
        elif coroots[index[_neg(a)]] != _neg(av):
            fails.append(f"coroot of -root {i} is not -coroot {i}")
        for m in (2, -2):
            if tuple(m * x for x in a) in root_set:
                fails.append(f"root {i} is not reduced")
        for j, (b, bv) in enumerate(zip(roots, coroots)):
            sb = reflect(b, a, av)
            if sb not in index:
                fails.append(f"reflection {i} maps root {j} outside the root set")
                continue
            sbv = reflect(bv, av, a)
            if coroots[index[sb]] != sbv:
                fails.append(f"reflection {i} breaks the root/coroot bijection at {j}")
    return ValidationReport(not fails, tuple(fails))


def dual_root_datum(d):
    if not validate_root_datum(d):
        raise RootDatumError("dual of an invalid root datum")
    return RootDatum(d.rank, d.coroots, d.roots)


def _solve_in_basis(basis, v):
    """Rational coefficients ``c`` with ``sum c_i basis_i == v`` (basis independent)."""
    from ..algebra.fields import QQ
    from ..algebra.linalg import row_reduce
    n = len(basis)
    # columns = basis vectors, augmented with v
    rows = [[Fraction(basis[i][k]) for i in range(n)] + [Fraction(v[k])] for k in range(len(v))]
    R, piv = row_reduce(rows, QQ)
    if n in piv:
        return None
    out = [Fraction(0)] * n
    for row, p in zip(R, piv):
        out[p] = row[n]
    return out


@dataclass(frozen=True)
class BasedRootDatum:
    datum: RootDatum
    base: tuple
    name: str = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "base", tuple(int(i) for i in self.base))

    @property
    def rank(self):
        return self.datum.rank

    @property
    def simple_roots(self):
        return [self.datum.roots[i] for i in self.base]

    @property
    def simple_coroots(self):
        return [self.datum.coroots[i] for i in self.base]

    def cartan_pairs(self):
        """``[<a_i, a_j^v>]`` over the base."""
        return [[pair(a, bv) for bv in self.simple_coroots] for a in self.simple_roots]

    def validate(self):
        rep = validate_root_datum(self.datum)
        fails = list(rep.failures)
        simple = self.simple_roots
        if len(set(self.base)) != len(self.base):
            fails.append("repeated base index")
        elif simple:
            from ..algebra.fields import QQ
            from ..algebra.linalg import rank
            if rank([[Fraction(a) for a in r] for r in simple], QQ) != len(simple):
                fails.append("base is linearly dependent")
            else:
                for j, r in enumerate(self.datum.roots):
                    c = _solve_in_basis(simple, r)
                    if c is None or any(x.denominator != 1 for x in c):
                        fails.append(f"root {j} is not an integral combination of the base")
                    elif not (all(x >= 0 for x in c) or all(x <= 0 for x in c)):
                        fails.append(f"root {j} has mixed signs over the base")
        elif self.datum.roots:
            fails.append("empty base for nonempty root set")
        return ValidationReport(not fails, tuple(fails))

    def canonical(self):
        d, order = self.datum.canonical()
        pos = {old: new for new, old in enumerate(order)}
        return BasedRootDatum(d, tuple(pos[i] for i in self.base), self.name)

    def to_json(self):
        out = self.datum.to_json()
        out["base"] = list(self.base)
        if self.name:
            out["name"] = self.name
        return out

    @classmethod
    def from_json(cls, data):
        d = RootDatum(int(data["rank"]), data["roots"], data["coroots"])
        if "base" in data:
            base = data["base"]
        else:
            base = choose_base(d)
        b = cls(d, base, data.get("name"))
        rep = b.validate()
        if not rep:
            raise RootDatumError("invalid based root datum: " + "; ".join(rep.failures))
        return b


def choose_base(d):
    """Simple roots for the positive system cut out by a generic integer functional."""
    if not d.roots:
        return ()
    big = 1 + 2 * max(abs(a) for r in d.roots for a in r)
    weights = [big ** k for k in range(d.rank)]
    pos = [i for i, r in enumerate(d.roots) if pair(r, weights) > 0]
    if len(pos) * 2 != len(d.roots):
        raise RootDatumError("functional is not generic")
    pos_set = {d.roots[i] for i in pos}
    simple = []
    for i in pos:
        r = d.roots[i]
        if not any(tuple(a - b for a, b in zip(r, d.roots[j])) in pos_set for j in pos if j != i):
            simple.append(i)
    return tuple(simple)


def unimodular_solve(basis_src, basis_dst):
    """Integer matrix ``M`` with ``basis_src @ M == basis_dst``, or ``None``."""
    inv = rational_inverse(basis_src)
    n = len(basis_src)
    M = [[sum(inv[i][k] * basis_dst[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    if any(x.denominator != 1 for row in M for x in row):
        return None
    M = IntMatrix([[int(x) for x in row] for row in M])
    return M if abs(M.det()) == 1 else None
