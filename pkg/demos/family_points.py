#!/usr/bin/env python3
"""Points of the versal family of cyclic étale algebras.

Each point is a tuple of polynomials: the defining polynomial f, images of z
under the group, and the data witnessing separability.  Verification checks
every relation of the family exactly.
"""

from versalforms.algebra import QQ, GF, Poly, find_irreducible
from versalforms.etale import (construct_point_finite_field, construct_point_rational,
                               cyclotomic_point, emit_presentation, fiber_algebra,
                               invariant_subalgebra, point_values, tensor_split,
                               verify_family_point)
from versalforms.groups import cyclic_group

# F_8 over F_2, with Z/3 acting through Frobenius
pt = construct_point_finite_field(2, 1, 3)
print("f =", pt.f)
print(verify_family_point(pt).summary())

alg = fiber_algebra(pt)
print("invariants:", len(invariant_subalgebra(alg)), "dimensional")
split = tensor_split(alg, GF(2, find_irreducible(2, 3).coeffs))
print("over F_8 the algebra splits into", split.components, "components,",
      "permuted transitively:", split.is_transitive())

# Q(sqrt 2) and the fifth cyclotomic field
x = Poly.x(QQ)
for p in (construct_point_rational(x * x - 2, [x, -x], cyclic_group(2)), cyclotomic_point(5)):
    print(p.f, "->", "ok" if verify_family_point(p).ok else "FAIL")

# the family itself, for Z/2: relations in 9 variables
fam, _ = emit_presentation(cyclic_group(2))
print(f"\nZ/2 family: {fam.nvars} variables, {len(fam.relations)} relations")
for r in fam.format()[:4]:
    print("  ", r)
print("   ...")
print("vanishes at the F_4 point:", fam.vanishes_at(point_values(construct_point_finite_field(2, 1, 2)),
                                                  GF(2)))
