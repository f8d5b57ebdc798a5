"""
Brauer, Jones and Kauffman monoids
==================================

Forgetting circles gives the Brauer monoid; its planar part is the Jones
monoid, counted by the Catalan numbers.
"""

import math

from wiremonoids import (
    Chip,
    embed_double,
    embed_pad,
    enumerate_brauer,
    enumerate_jones,
    fiber_increment,
    format_chip,
    hook,
    idempotents,
    jones_monoid,
    multiply,
)

for n in range(1, 7):
    print(n, len(enumerate_brauer(n)), len(enumerate_jones(n)), math.comb(2 * n, n) // (n + 1))

# J_4 as the closure of its hooks, as a Cayley table.
J = jones_monoid(4)
print(len(J), "elements,", len(idempotents(J)), "idempotents")

# Over an idempotent pi the chips (pi; k) multiply like k + l + m.
for x in idempotents(J)[:4]:
    pi = J.elements[x]
    m = fiber_increment(pi)
    lhs = multiply(Chip(pi, 2), Chip(pi, 5))
    print(format_chip(Chip(pi)), "m =", m, "->", lhs.circles == 2 + 5 + m)

# Padding shifts hooks; doubling sends h_i to h_i h_(n+i).
print(format_chip(embed_pad(hook(3, 1), 1, 1)))
print(format_chip(embed_double(hook(2, 1))))
