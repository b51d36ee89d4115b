"""Finite groups, a small-group catalog, homomorphism classes and 1-cocycles."""

from .catalog import (MAX_CATALOG_ORDER, abelian_group, catalog_id, cyclic_group, dicyclic_group,
                      dihedral_group, group_by_id, group_catalog, groups_of_order,
                      semidirect_group, symmetric_group)
from .cohomology import (CohomologyClass, Cocycle, GroupAction, HomClass, all_homomorphisms,
                         are_cohomologous, h1_classes, hom_classes, trivial_cocycle, z1_cocycles)
from .finite_group import (ExplicitGroup, FiniteGroup, GroupError, direct_product, extend_hom,
                           find_isomorphism, group_from_elements, group_from_generators,
                           is_homomorphism)

__all__ = [
    "MAX_CATALOG_ORDER", "abelian_group", "catalog_id", "cyclic_group", "dicyclic_group",
    "dihedral_group", "group_by_id", "group_catalog", "groups_of_order", "semidirect_group",
    "symmetric_group", "CohomologyClass", "Cocycle", "GroupAction", "HomClass",
    "all_homomorphisms", "are_cohomologous", "h1_classes", "hom_classes", "trivial_cocycle",
    "z1_cocycles", "ExplicitGroup", "FiniteGroup", "GroupError", "direct_product", "extend_hom",
    "find_isomorphism", "group_from_elements", "group_from_generators", "is_homomorphism",
]
