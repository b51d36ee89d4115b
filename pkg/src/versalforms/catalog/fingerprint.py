"""Cheap isomorphism invariants of explicit finite groups."""

from __future__ import annotations


def closure(gens, mul, identity):
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def generating_set(group):
    """Greedy generators in element order."""
    gens, span = [], {group.identity}
    for x in group.elements:
        if len(span) == group.order:
            break
        if x not in span:
            gens.append(x)
            span = closure(gens, group.mul, group.identity)
    return gens


def center(group, gens=None):
    gens = generating_set(group) if gens is None else gens
    return [z for z in group.elements if all(group.mul(z, g) == group.mul(g, z) for g in gens)]


def derived_subgroup(group, gens=None):
    """Normal closure of the commutators of a generating set."""
    gens = generating_set(group) if gens is None else gens
    mul, inv = group.mul, group.inv
    comm = [mul(mul(a, b), mul(inv(a), inv(b))) for a in gens for b in gens]
    ngens = [c for c in comm if c != group.identity]
    span = closure(ngens, mul, group.identity)
    changed = True
    while changed:
        changed = False
        for h in list(ngens):
            for g in gens:
                c = mul(mul(g, h), inv(g))
                if c not in span:
                    ngens.append(c)
                    span = closure(ngens, mul, group.identity)
                    changed = True
    return span


def fingerprint(group, quasi_split=True):
    """``(order, center order, abelianization order, quasi-split flag)``.

    Equal groups give equal fingerprints; different groups may collide.
    """
    gens = generating_set(group)
    order = group.order
    return (order, len(center(group, gens)), order // len(derived_subgroup(group, gens)),
            bool(quasi_split))
