#!/usr/bin/env python3
"""The special unitary group SU3 over F2, found as fixed points of a twisted Frobenius.

SL3 over F4 has 60480 points.  Composing the Frobenius of F4/F2 with the pinned
outer automorphism (transpose-inverse conjugated by the antidiagonal) gives an
action of Z/2 whose fixed points form SU3(F2).
"""

import time

from versalforms.catalog import fingerprint
from versalforms.descent import (SL, TwistSpec, alpha_from_generator, embedded_base_points,
                                 finite_point_group, is_quasi_split_twist, pinned_outer,
                                 trivial_alpha, twisted_fixed_points)

G = finite_point_group(SL(3), 2, 1, 2)
print("|SL3(F4)| =", G.order)

# the untwisted action only gives back SL3(F2)
H0 = twisted_fixed_points(TwistSpec(G, trivial_alpha(G)))
print("trivial twist:", H0.order, "points, equal to SL3(F2):",
      H0.elements == embedded_base_points(G))

# now twist by the diagram flip
t0 = time.perf_counter()
t = TwistSpec(G, alpha_from_generator(G, pinned_outer(G, "flip")))
H = twisted_fixed_points(t)
print(f"unitary twist: {H.order} points ({time.perf_counter() - t0:.1f} s)")

q = 2
print("q^3 (q^2 - 1) (q^3 + 1) =", q ** 3 * (q ** 2 - 1) * (q ** 3 + 1))

rep = is_quasi_split_twist(t, H)
print("pinning preserved:", rep.quasi_split, "| Borel fixed points:", len(rep.witness))

order, center, ab, qs = fingerprint(H, rep.quasi_split)
print(f"order {order}, center {center}, abelianization {ab}")
