"""
Words and identities
====================

Zimin words, exhaustive identity checks over small tables, bounded
refutation in K_3 and bounded isoterm search in B_2^1.
"""

from wiremonoids import ChipMonoid, brandt_b21, format_chip, parse_identity, refute_identity, satisfies_identity, zimin
from wiremonoids.words import isoterm_witnesses, zimin_fingerprint_k3

for n in range(1, 5):
    print(zimin(n))

# Substituting c or h_1 for one letter and 1 for the rest.
for i in range(1, 5):
    print(i, format_chip(zimin_fingerprint_k3(4, i, "c")), format_chip(zimin_fingerprint_k3(4, i, "h1")))

B = brandt_b21()
for text in ("x1 x2 x1 x2 x1 = x1 x2 x1", "x1 x1 x1 = x1 x1", "x1 x1* x1 = x1"):
    print(text, "->", satisfies_identity(B, parse_identity(text)))

M = ChipMonoid(3)
a = refute_identity(parse_identity("x1 x2 = x2 x1"), M.generators(), M, 1)
print({k: format_chip(v) for k, v in a.items()})

# No other word of length at most 8 is equivalent to Z_3 in B_2^1.
print(isoterm_witnesses(B, zimin(3), 8))
