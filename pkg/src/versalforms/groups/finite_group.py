"""Finite groups given by multiplication tables.

Element ``0`` is always the identity and ``table[i][j]`` is the index of
``g_i g_j``.  Groups handed around as "group-like" objects only need
``elements``, ``identity``, ``mul`` and ``inv``; :class:`FiniteGroup` and
:class:`ExplicitGroup` both provide them.
"""

from __future__ import annotations

import itertools
from collections import deque

import numpy as np


class GroupError(ValueError):
    pass


class FiniteGroup:
    def __init__(self, table, labels=None, name=None, check=True):
        T = np.array(table, dtype=np.int64)
        if T.ndim != 2 or T.shape[0] != T.shape[1] or T.shape[0] == 0:
            raise GroupError("table must be a nonempty square matrix")
        T.flags.writeable = False
        self.table = T
        self.order = T.shape[0]
        self.identity = 0
        self.labels = list(labels) if labels is not None else [f"g{i}" for i in range(self.order)]
        self.name = name
        self._rows = T.tolist()
        if check:
            self.validate()
        self._inv = [row.index(0) for row in self._rows]

    def validate(self):
        T, m = self.table, self.order
        if T.min() < 0 or T.max() >= m:
            raise GroupError("table entries out of range")
        if not (np.array_equal(T[0], np.arange(m)) and np.array_equal(T[:, 0], np.arange(m))):
            raise GroupError("element 0 is not a two-sided identity")
        for row in self._rows:
            if len(set(row)) != m:
                raise GroupError("table is not a Latin square")
        if any(0 not in row for row in self._rows):
            raise GroupError("missing inverses")
        if m <= 400:
            if not np.array_equal(T[T], T[:, T]):
                raise GroupError("table is not associative")
        else:
            idx = np.random.default_rng(0).integers(0, m, size=(3, 2000))
            a, b, c = idx
            if not np.array_equal(T[T[a, b], c], T[a, T[b, c]]):
                raise GroupError("table is not associative")

    # group-like protocol

    @property
    def elements(self):
        return range(self.order)

    def mul(self, a, b):
        return self._rows[a][b]

    def inv(self, a):
        return self._inv[a]

    def __len__(self):
        return self.order

    def power(self, a, n):
        n %= self.element_order(a)
        r = 0
        for _ in range(n):
            r = self._rows[r][a]
        return r

    def element_order(self, a):
        n, x = 1, a
        while x != 0:
            x = self._rows[x][a]
            n += 1
        return n

    def conj(self, g, a):
        """``g a g^{-1}``."""
        return self._rows[self._rows[g][a]][self._inv[g]]

    def is_abelian(self):
        return np.array_equal(self.table, self.table.T)

    def closure(self, gens):
        seen = {0}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = self._rows[x][g]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen

    def generators(self):
        """A small generating set found greedily (largest element orders first)."""
        if self.order == 1:
            return []
        cands = sorted(range(1, self.order), key=lambda a: (-self.element_order(a), a))
        gens, span = [], {0}
        while len(span) < self.order:
            best = None
            for a in cands:
                if a in span:
                    continue
                s = self.closure(gens + [a])
                if best is None or len(s) > len(best[1]):
                    best = (a, s)
                    if len(s) == self.order:
                        break
            gens.append(best[0])
            span = best[1]
        return gens

    def words(self, gens):
        """Spanning tree from the identity: ``{element: (parent, generator)}``."""
        tree = {0: None}
        queue = deque([0])
        order = [0]
        while queue:
            x = queue.popleft()
            for g in gens:
                y = self._rows[x][g]
                if y not in tree:
                    tree[y] = (x, g)
                    queue.append(y)
                    order.append(y)
        return tree, order

    def center(self):
        return [z for z in range(self.order) if all(self._rows[z][g] == self._rows[g][z]
                                                    for g in range(self.order))]

    def order_statistics(self):
        counts = {}
        for a in range(self.order):
            k = self.element_order(a)
            counts[k] = counts.get(k, 0) + 1
        return tuple(sorted(counts.items()))

    def to_json(self):
        return {"order": self.order, "table": self.table.tolist(), "labels": list(self.labels)}

    @classmethod
    def from_json(cls, data, name=None):
        g = cls(data["table"], data.get("labels"), name=name or data.get("name"))
        if g.order != data.get("order", g.order):
            raise GroupError("order does not match table")
        return g

    def __repr__(self):
        return f"FiniteGroup({self.name or '?'}, order={self.order})"

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())


def group_from_elements(elements, mul, identity, name=None, labels=None):
    """Table of a finite set closed under ``mul``; ``identity`` becomes index 0."""
    elems = [identity] + [e for e in elements if e != identity]
    index = {e: i for i, e in enumerate(elems)}
    table = [[index[mul(a, b)] for b in elems] for a in elems]
    return FiniteGroup(table, labels or [str(e) for e in elems], name=name), elems


def group_from_generators(gens, mul, identity, name=None, label=str):
    elems = [identity]
    seen = {identity}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = mul(x, g)
            if y not in seen:
                seen.add(y)
                elems.append(y)
                queue.append(y)
    return group_from_elements(elems, mul, identity, name, [label(e) for e in elems])


class ExplicitGroup:
    """A finite group given by an element list and a multiplication function."""

    def __init__(self, elements, mul, inv, identity, name=None):
        self.elements = list(elements)
        self.mul = mul
        self.inv = inv
        self.identity = identity
        self.name = name
        self.order = len(self.elements)
        self._set = None

    def __len__(self):
        return self.order

    def __contains__(self, x):
        if self._set is None:
            self._set = set(self.elements)
        return x in self._set

    def as_finite_group(self):
        g, elems = group_from_elements(self.elements, self.mul, self.identity, self.name)
        return g, elems

    def __repr__(self):
        return f"ExplicitGroup({self.name or '?'}, order={self.order})"


def direct_product(G, H, name=None):
    m, n = G.order, H.order
    table = [[G.mul(a // n, b // n) * n + H.mul(a % n, b % n) for b in range(m * n)]
             for a in range(m * n)]
    labels = [f"({G.labels[a // n]},{H.labels[a % n]})" for a in range(m * n)]
    return FiniteGroup(table, labels, name=name or f"{G.name}x{H.name}")


def find_isomorphism(G, H):
    """An isomorphism ``G -> H`` as a list of indices, or ``None``."""
    if G.order != H.order or G.order_statistics() != H.order_statistics():
        return None
    if G.is_abelian() != H.is_abelian() or len(G.center()) != len(H.center()):
        return None
    gens = G.generators()
    tree, order = G.words(gens)
    by_order = {}
    for h in range(H.order):
        by_order.setdefault(H.element_order(h), []).append(h)
    choices = [by_order.get(G.element_order(g), []) for g in gens]
    for images in itertools.product(*choices):
        phi = extend_hom(G, H, gens, images, tree, order)
        if phi is not None and len(set(phi)) == G.order:
            return phi
    return None


def extend_hom(G, H, gens, images, tree=None, order=None):
    """Extend generator images to a homomorphism; ``None`` if inconsistent."""
    if tree is None:
        tree, order = G.words(gens)
    img = dict(zip(gens, images))
    phi = [None] * G.order
    phi[0] = H.identity
    for x in order[1:]:
        parent, g = tree[x]
        phi[x] = H.mul(phi[parent], img[g])
    for a in range(G.order):
        for g in gens:
            if phi[G.mul(a, g)] != H.mul(phi[a], img[g]):
                return None
    return phi


def is_homomorphism(G, H, phi):
    return all(phi[G.mul(a, b)] == H.mul(phi[a], phi[b]) for a in G.elements for b in G.elements)
