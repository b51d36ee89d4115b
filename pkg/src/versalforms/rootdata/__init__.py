"""Root data: validation, duality, enumeration, isomorphism and based automorphisms."""

from .datum import (BasedRootDatum, RootDatum, RootDatumError, ValidationReport, choose_base,
                    dual_root_datum, validate_root_datum)
from .enumerate import (enumerate_all, enumerate_root_data, find_isomorphism, gluing_invariant,
                        is_isomorphic)
from .named import named_root_data, named_root_datum
from .automorphisms import (AutomorphismGroup, BasedAut, InfiniteAutomorphismGroup,
                            based_automorphism_group, gl2z_finite_subgroups,
                            torus_rank2_hom_classes)
