"""Cartan types of small rank and their root systems in weight coordinates.

For a type with pairing matrix ``A[i][j] = <a_i, a_j^v>`` the simple root
``a_i`` has fundamental-weight coordinates ``A[i]`` and the simple coroot
``a_j^v`` has coordinates ``e_j`` in the dual basis.  The remaining roots and
coroots come from closing under the simple reflections.
"""

from __future__ import annotations

import itertools
from collections import deque

from ..algebra.intmatrix import smith_normal_form
from .datum import reflect

IRREDUCIBLE = {
    "A1": [[2]],
    "A2": [[2, -1], [-1, 2]],
    "B2": [[2, -2], [-1, 2]],
    "G2": [[2, -1], [-3, 2]],
    "A3": [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
    "B3": [[2, -1, 0], [-1, 2, -2], [0, -1, 2]],
    "C3": [[2, -1, 0], [-1, 2, -1], [0, -2, 2]],
}

# semisimple types by rank, in enumeration order
TYPES_BY_RANK = {
    0: [()],
    1: [("A1",)],
    2: [("A1", "A1"), ("A2",), ("B2",), ("G2",)],
    3: [("A1", "A1", "A1"), ("A1", "A2"), ("A1", "B2"), ("A1", "G2"), ("A3",), ("B3",), ("C3",)],
}


def type_name(components):
    return "x".join(components) if components else "T"


def pairing_matrix(components):
    """Block-diagonal pairing matrix of a product of irreducible types."""
    blocks = [IRREDUCIBLE[c] for c in components]
    n = sum(len(b) for b in blocks)
    A = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                A[off + i][off + j] = x
        off += len(b)
    return A


def root_system(A):
    """``(roots, coroots)`` in weight / dual coordinates, simple ones first."""
    n = len(A)
    simple = [(tuple(A[i]), tuple(int(i == j) for j in range(n))) for i in range(n)]
    seen = {s[0]: s[1] for s in simple}
    order = [s[0] for s in simple]
    queue = deque(order)
    while queue:
        r = queue.popleft()
        rv = seen[r]
        for a, av in simple:
            s = reflect(r, a, av)
            if s not in seen:
                seen[s] = reflect(rv, av, a)
                order.append(s)
                queue.append(s)
    return order, [seen[r] for r in order]


def diagram_automorphisms(A):
    """Permutations ``p`` of the simple roots with ``A[p i][p j] == A[i][j]``."""
    n = len(A)
    return [p for p in itertools.permutations(range(n))
            if all(A[p[i]][p[j]] == A[i][j] for i in range(n) for j in range(n))]


def matching_permutations(A, B):
    """Permutations ``p`` with ``B[p i][p j] == A[i][j]`` (relabel ``A`` as ``B``)."""
    n = len(A)
    if len(B) != n:
        return []
    return [p for p in itertools.permutations(range(n))
            if all(B[p[i]][p[j]] == A[i][j] for i in range(n) for j in range(n))]


def identify_type(A):
    """``(components, p)`` such that the standard matrix relabels ``A`` via ``p``."""
    n = len(A)
    for comps in TYPES_BY_RANK.get(n, []):
        perms = matching_permutations(A, pairing_matrix(comps))
        if perms:
            return comps, perms[0]
    raise ValueError("unsupported Cartan type")


def fundamental_group(A):
    """``P/Q`` as ``(invariant factors d_i > 1, V)`` with ``x -> (x V)_i mod d_i``.

    Rows of ``A`` span ``Q`` inside ``P = Z^n``.
    """
    if not A:
        return [], []
    U, D, V = smith_normal_form(A)
    diag = D.diagonal()
    keep = [i for i, d in enumerate(diag) if d != 1]
    return [diag[i] for i in keep], (V, keep)
