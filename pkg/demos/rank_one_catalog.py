#!/usr/bin/env python3
"""Every descended group of rank 1 over F3, with fingerprints.

Rank 1 root data are Gm, SL2 and PGL2.  For each, every hom class from a group
of order at most 2 into the diagram automorphisms is realized at the point
F9/F3 and the fixed points are fingerprinted as
(order, center, abelianization, quasi-split).
"""

from versalforms.catalog import build_catalog

cat = build_catalog(1, 3)
for e in cat["entries"]:
    print(f"{e['datum']:5s} gamma {e['gamma']:4s} alpha {str(e['alpha']):18s} -> {e['fingerprint']}")

print("\ndistinct fingerprints:")
for f in cat["fingerprints"]:
    print("  ", f)

# inner twists add nothing over a finite field
ex = build_catalog(1, 3, cocycles="exhaustive")
print(f"\nall cocycles: {len(ex['entries'])} entries, "
      f"same fingerprints: {ex['fingerprints'] == cat['fingerprints']}")

# over F2 two of them collapse, since SL2(F2) and PGL2(F2) are both S3
print("over F2:", build_catalog(1, 2)["fingerprints"])
