"""
The Kauffman monoid K_3 modulo circles
======================================

Collapsing every chip with a circle to zero leaves six elements. With the
reflection this is the Brandt monoid B_2^1 as an involution monoid. With
the rotation the plain monoid is the same, but the involution differs.
"""

from wiremonoids import brandt_b21, is_isomorphic, k3_quotient

Q = k3_quotient("star")
B = brandt_b21()
f = is_isomorphic(Q, B)
for x, y in sorted(f.items()):
    print(f"{Q.elements[x]:>5} -> {B.elements[y]}")

for name in ("star", "rotate"):
    Q = k3_quotient(name)
    inv = {Q.elements[x]: Q.elements[int(Q.involution[x])] for x in range(len(Q))}
    print(name, inv)
