"""Catalogs of descended groups over a finite field.

For every root datum of the requested rank with a supported group kind, every
index entry ``(Gamma, [alpha])`` with cyclic ``Gamma``, the family point of
``F_{q^m}/F_q`` and every cocycle of the chosen mode, the twisted fixed-point
group is computed and fingerprinted.
"""

from __future__ import annotations

import json

from ..descent import (FiniteAlgebra, PointGroup, SizeError, TwistSpec, UnsupportedError,
                       inner_cocycles, pinned_outer, quasi_split_flag, twisted_fixed_points)
from ..descent.groups import PGL, SL, Product, Torus
from ..etale import construct_point_finite_field, fiber_algebra, verify_family_point
from ..groups.finite_group import find_isomorphism
from ..rootdata.enumerate import enumerate_root_data
from .fingerprint import fingerprint
from .index import UnsupportedDatum, build_index_set

FORMAT = "versalforms-catalog"
VERSION = 1

_GL1 = Torus(1)
SPECS = {
    "trivial": Torus(0), "Gm": _GL1, "Gm^2": Torus(2), "Gm^3": Torus(3),
    "SL2": SL(2), "PGL2": PGL(2), "SL3": SL(3), "PGL3": PGL(3), "SL4": SL(4), "PGL4": PGL(4),
    "SL2xGm": Product([SL(2), _GL1]), "PGL2xGm": Product([PGL(2), _GL1]),
    "SL2xSL2": Product([SL(2), SL(2)]), "SL2xPGL2": Product([SL(2), PGL(2)]),
    "PGL2xPGL2": Product([PGL(2), PGL(2)]),
}


def spec_for(datum):
    """The supported group kind with this root datum, or ``None``."""
    return SPECS.get(datum.name)


def _is_cyclic(gamma):
    return any(gamma.element_order(g) == gamma.order for g in gamma.elements)


def point_id(p, k, m):
    return f"ff-{p}-{k}-{m}"


def _matrix_json(x):
    if isinstance(x, tuple):
        return [_matrix_json(v) for v in x]
    return x


def build_catalog(rank, p, k=1, order_bound=2, cocycles="trivial", include_lower=False):
    """Catalog dictionary (JSON-ready, deterministic)."""
    if cocycles not in ("trivial", "exhaustive"):
        raise ValueError("cocycles must be 'trivial' or 'exhaustive'")
    data = []
    for n in (range(rank + 1) if include_lower else [rank]):
        data.extend(enumerate_root_data(n))
    entries, skipped, points = [], [], {}
    algebras = {}
    for b in data:
        spec = spec_for(b)
        if spec is None:
            skipped.append({"datum": b.name, "reason": "no matrix model for this root datum"})
            continue
        try:
            index = build_index_set(b, order_bound)
        except UnsupportedDatum as exc:
            skipped.append({"datum": b.name, "reason": str(exc)})
            continue
        for ie in index:
            base = {"datum": b.name, "gamma": ie.gamma.id,
                    "alpha": [a.matrix.tolist() for a in ie.alpha]}
            if not _is_cyclic(ie.gamma):
                entries.append(dict(base, status="no finite-field point (non-cyclic group)"))
                continue
            m = ie.gamma.order
            pid = point_id(p, k, m)
            if pid not in algebras:
                pt = construct_point_finite_field(p, k, m)
                if not verify_family_point(pt).ok:
                    raise RuntimeError(f"family point {pid} failed verification")
                points[pid] = pt.to_json()
                algebras[pid] = (pt, FiniteAlgebra(fiber_algebra(pt)))
            pt, R = algebras[pid]
            G = PointGroup(spec, R)
            if not G.enumerable:
                entries.append(dict(base, point=pid, status="size cutoff",
                                    size_estimate=G.size_estimate))
                continue
            # transport alpha to the point's copy of Gamma
            iso = find_isomorphism(pt.gamma, ie.gamma)
            alpha = [pinned_outer(G, ie.alpha[iso[g]], datum=b) for g in pt.gamma.elements]
            t = TwistSpec(G, alpha)
            try:
                if cocycles == "trivial":
                    cocs = [tuple(G.spec.inner_identity(R) for _ in pt.gamma.elements)]
                else:
                    _, _, found = inner_cocycles(t)
                    cocs = [c.values for c in found]
                for ci, values in enumerate(cocs):
                    tc = TwistSpec(G, alpha, [G.inner_aut(v) for v in values])
                    H = twisted_fixed_points(tc)
                    fp = fingerprint(H, quasi_split_flag(tc))
                    entries.append(dict(base, point=pid, cocycle=ci,
                                        cocycle_values=[_matrix_json(v) for v in values],
                                        fingerprint=list(fp), status="ok"))
            except (SizeError, UnsupportedError) as exc:
                entries.append(dict(base, point=pid, status=f"skipped: {exc}"))
    fps = sorted({tuple(e["fingerprint"]) for e in entries if "fingerprint" in e})
    return {
        "format": FORMAT, "version": VERSION,
        "rank": rank, "field": {"p": p, "k": k, "q": p ** k},
        "order_bound": order_bound, "cocycles": cocycles, "include_lower": include_lower,
        "points": points, "entries": entries, "skipped": skipped,
        "fingerprints": [list(f) for f in fps],
    }


def fingerprint_set(catalog):
    return {tuple(f) for f in catalog["fingerprints"]}


def dumps(catalog):
    return json.dumps(catalog, sort_keys=True, indent=1) + "\n"


def write_catalog(catalog, path):
    with open(path, "w") as fh:
        fh.write(dumps(catalog))


def load_catalog(path, verify=True):
    """Read a catalog; with ``verify`` the points and cocycles are re-checked."""
    with open(path) as fh:
        cat = json.load(fh)
    if cat.get("format") != FORMAT:
        raise ValueError("not a catalog file")
    if verify:
        verify_catalog(cat)
    return cat


def verify_catalog(cat):
    """Re-verify family points and the cocycle identity of every materialized entry."""
    from ..etale.family import FamilyPoint
    from ..rootdata.enumerate import enumerate_root_data as _enum
    algebras = {}
    for pid, pj in cat["points"].items():
        pt = FamilyPoint.from_json(pj)
        rep = verify_family_point(pt)
        if not rep.ok:
            raise ValueError(f"point {pid} fails verification:\n{rep.summary()}")
        algebras[pid] = (pt, FiniteAlgebra(fiber_algebra(pt)))
    ranks = range(cat["rank"] + 1) if cat.get("include_lower") else [cat["rank"]]
    data = {b.name: b for n in ranks for b in _enum(n)}
    from ..groups.catalog import group_by_id
    from ..algebra.intmatrix import IntMatrix
    from ..rootdata.automorphisms import BasedAut
    for e in cat["entries"]:
        if e.get("status") != "ok":
            continue
        b = data[e["datum"]]
        pt, R = algebras[e["point"]]
        G = PointGroup(spec_for(b), R)
        gamma = group_by_id(e["gamma"])
        iso = find_isomorphism(pt.gamma, gamma)
        alpha = [pinned_outer(G, BasedAut(IntMatrix(e["alpha"][iso[g]]), ()), datum=b)
                 for g in pt.gamma.elements]
        vals = [_from_json(v) for v in e["cocycle_values"]]
        TwistSpec(G, alpha, [G.inner_aut(v) for v in vals]).validate()
    return True


def _from_json(v):
    if isinstance(v, list):
        return tuple(_from_json(x) for x in v)
    return v
