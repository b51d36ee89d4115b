"""The index set: pairs ``(Gamma, [alpha])`` for a based root datum."""

from __future__ import annotations

from dataclasses import dataclass

from ..groups.catalog import group_catalog
from ..groups.cohomology import hom_classes
from ..rootdata.automorphisms import (BasedAut, InfiniteAutomorphismGroup,
                                      based_automorphism_group, torus_rank2_hom_classes)
from ..rootdata.datum import RootDatumError


class UnsupportedDatum(RootDatumError):
    pass


@dataclass
class IndexEntry:
    datum: object          # BasedRootDatum
    gamma: object          # FiniteGroup from the catalog
    alpha: tuple           # BasedAut per element of gamma

    def is_trivial(self):
        return all(a.is_identity() for a in self.alpha)

    def to_json(self):
        return {"datum": self.datum.name, "gamma": self.gamma.id,
                "alpha": [a.matrix.tolist() for a in self.alpha]}


def _homs(datum, gamma):
    try:
        A = based_automorphism_group(datum)
    except InfiniteAutomorphismGroup:
        d = datum.datum
        if d.rank == 2 and not d.roots:
            return [tuple(BasedAut(M, ()) for M in rho) for rho in torus_rank2_hom_classes(gamma)]
        raise UnsupportedDatum(f"{datum.name}: automorphism group is infinite outside the "
                               "rank-2 torus catalog") from None
    return [tuple(A.elements[i] for i in h) for h in hom_classes(gamma, A.group)]


def build_index_set(datum, order_bound):
    """All ``(Gamma, hom class)`` with ``|Gamma| <= order_bound``, in catalog order."""
    out = []
    for gamma in group_catalog(order_bound):
        for alpha in _homs(datum, gamma):
            out.append(IndexEntry(datum, gamma, alpha))
    return out
