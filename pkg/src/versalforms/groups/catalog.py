"""Hand-encoded catalog of the finite groups of order at most 16.

Within each order the groups follow the usual small-group numbering, so
``group_by_id("8.4")`` is the quaternion group.  Every group is built from a
presentation (cyclic, abelian, semidirect by a cyclic group, dicyclic) and
converted to a multiplication table.
"""

from __future__ import annotations

import functools

from .finite_group import FiniteGroup, GroupError, direct_product, group_from_elements

MAX_CATALOG_ORDER = 16


def abelian_group(ns, name=None):
    """``Z/n_1 x ... x Z/n_k``."""
    ns = tuple(ns)
    elems = _tuples(ns)
    mul = lambda a, b: tuple((x + y) % n for x, y, n in zip(a, b, ns))
    return group_from_elements(elems, mul, tuple(0 for _ in ns), name,
                               [_fmt(e) for e in elems])[0]


def cyclic_group(n, name=None):
    return abelian_group((n,), name or f"C{n}")


def semidirect_group(ns, images, k, name=None):
    """``(Z/n_1 x ... ) ⋊ Z/k`` where the generator of ``Z/k`` sends the i-th basis
    vector of the abelian normal subgroup to ``images[i]``."""
    ns = tuple(ns)

    def sigma(v):
        out = [0] * len(ns)
        for coeff, img in zip(v, images):
            for j, c in enumerate(img):
                out[j] += coeff * c
        return tuple(x % n for x, n in zip(out, ns))

    elems_n = _tuples(ns)
    # precompute sigma^i on every element
    table = {v: [v] for v in elems_n}
    for v in elems_n:
        for _ in range(k - 1):
            table[v].append(sigma(table[v][-1]))
        if sigma(table[v][-1]) != v:
            raise GroupError("automorphism order does not divide k")

    def mul(a, b):
        (v1, i1), (v2, i2) = a, b
        w = table[v2][i1]
        return (tuple((x + y) % n for x, y, n in zip(v1, w, ns)), (i1 + i2) % k)

    elems = [(v, i) for i in range(k) for v in elems_n]
    ident = (tuple(0 for _ in ns), 0)
    return group_from_elements(elems, mul, ident, name, [f"{_fmt(v)}c^{i}" for v, i in elems])[0]


def dicyclic_group(n, name=None):
    """``<a, x | a^{2n}, x^2 = a^n, x a x^{-1} = a^{-1}>`` of order ``4n``."""
    m = 2 * n

    def mul(g, h):
        (i, j), (k, l) = g, h
        if j == 0:
            return ((i + k) % m, l)
        if l == 0:
            return ((i - k) % m, 1)
        return ((i - k + n) % m, 0)

    elems = [(i, j) for j in range(2) for i in range(m)]
    return group_from_elements(elems, mul, (0, 0), name or f"Dic{n}",
                               [f"a^{i}x^{j}" for i, j in elems])[0]


def dihedral_group(n, name=None):
    """Symmetries of an ``n``-gon, order ``2n``."""
    return semidirect_group((n,), [(n - 1,)], 2, name or f"D{2 * n}")


def symmetric_group(n, name=None):
    import itertools
    perms = list(itertools.permutations(range(n)))
    mul = lambda a, b: tuple(a[b[i]] for i in range(n))
    return group_from_elements(perms, mul, tuple(range(n)), name or f"S{n}",
                               [str(p) for p in perms])[0]


def _tuples(ns):
    out = [()]
    for n in ns:
        out = [t + (i,) for t in out for i in range(n)]
    return out


def _fmt(v):
    return "(" + ",".join(map(str, v)) + ")"


def _builders():
    C = cyclic_group
    A = abelian_group
    return {
        1: [lambda: C(1, "C1")],
        2: [lambda: C(2)],
        3: [lambda: C(3)],
        4: [lambda: C(4), lambda: A((2, 2), "C2xC2")],
        5: [lambda: C(5)],
        6: [lambda: dihedral_group(3, "S3"), lambda: C(6)],
        7: [lambda: C(7)],
        8: [lambda: C(8), lambda: A((4, 2), "C4xC2"), lambda: dihedral_group(4, "D8"),
            lambda: dicyclic_group(2, "Q8"), lambda: A((2, 2, 2), "C2^3")],
        9: [lambda: C(9), lambda: A((3, 3), "C3xC3")],
        10: [lambda: dihedral_group(5, "D10"), lambda: C(10)],
        11: [lambda: C(11)],
        12: [lambda: dicyclic_group(3, "Dic3"), lambda: C(12),
             lambda: semidirect_group((2, 2), [(0, 1), (1, 1)], 3, "A4"),
             lambda: dihedral_group(6, "D12"), lambda: A((6, 2), "C6xC2")],
        13: [lambda: C(13)],
        14: [lambda: dihedral_group(7, "D14"), lambda: C(14)],
        15: [lambda: C(15)],
        16: [lambda: C(16),
             lambda: A((4, 4), "C4xC4"),
             lambda: semidirect_group((4, 2), [(1, 1), (0, 1)], 2, "(C4xC2):C2"),
             lambda: semidirect_group((4,), [(3,)], 4, "C4:C4"),
             lambda: A((8, 2), "C8xC2"),
             lambda: semidirect_group((8,), [(5,)], 2, "M16"),
             lambda: dihedral_group(8, "D16"),
             lambda: semidirect_group((8,), [(3,)], 2, "SD16"),
             lambda: dicyclic_group(4, "Q16"),
             lambda: A((4, 2, 2), "C4xC2^2"),
             lambda: direct_product(dihedral_group(4, "D8"), C(2), "D8xC2"),
             lambda: direct_product(dicyclic_group(2, "Q8"), C(2), "Q8xC2"),
             lambda: semidirect_group((4, 2), [(1, 0), (2, 1)], 2, "C4oD8"),
             lambda: A((2, 2, 2, 2), "C2^4")],
    }


@functools.lru_cache(maxsize=None)
def _slice(order):
    if not 1 <= order <= MAX_CATALOG_ORDER:
        raise GroupError(f"catalog covers orders 1..{MAX_CATALOG_ORDER}")
    groups = []
    for idx, build in enumerate(_builders()[order], start=1):
        g = build()
        g.id = f"{order}.{idx}"
        groups.append(g)
    return tuple(groups)


def groups_of_order(order):
    return list(_slice(order))


def group_catalog(max_order):
    """One group per isomorphism class of order ``<= max_order``."""
    if max_order > MAX_CATALOG_ORDER:
        raise GroupError(f"group catalog is limited to order {MAX_CATALOG_ORDER}")
    out = []
    for n in range(1, max_order + 1):
        out.extend(_slice(n))
    return out


def group_by_id(gid):
    """Look up ``"order.index"`` or a catalog name such as ``"S3"``."""
    if "." in gid:
        order, idx = gid.split(".")
        groups = _slice(int(order))
        i = int(idx) - 1
        if not 0 <= i < len(groups):
            raise GroupError(f"no catalog group {gid}")
        return groups[i]
    for n in range(1, MAX_CATALOG_ORDER + 1):
        for g in _slice(n):
            if g.name == gid:
                return g
    if gid.startswith("Z/") and gid[2:].isdigit():
        return cyclic_group(int(gid[2:]))
    raise GroupError(f"unknown group {gid!r}")


def catalog_id(group):
    """Catalog id of a group isomorphic to ``group``."""
    from .finite_group import find_isomorphism
    if group.order > MAX_CATALOG_ORDER:
        return None
    for g in _slice(group.order):
        if find_isomorphism(group, g) is not None:
            return g.id
    return None


__all__ = ["FiniteGroup", "abelian_group", "cyclic_group", "semidirect_group", "dicyclic_group",
           "dihedral_group", "symmetric_group", "groups_of_order", "group_catalog", "group_by_id",
           "catalog_id", "MAX_CATALOG_ORDER"]
