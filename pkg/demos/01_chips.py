"""
Chips and their products
========================

A chip of degree n is a perfect matching on 2n pins plus a number of free
circles. This walks through the generators, the product and the two
involutions.
"""

from wiremonoids import alpha, circle, format_chip, hook, multiply, parse_chip, render, rotate, star

# The nine-pin chip with three circles.
xi = parse_chip("W9:1-5',2-4,3-5,6-9',7-9,8-8',1'-2',3'-4',6'-7';3")
print(render(xi))

# Hooks join neighbouring pins on both sides. Squaring one closes a loop.
h1, h2 = hook(3, 1), hook(3, 2)
print("h1      =", format_chip(h1))
print("h1 h1   =", format_chip(multiply(h1, h1)))
print("c h1    =", format_chip(multiply(circle(3), h1)))
print("h1 h2 h1 =", format_chip(multiply(multiply(h1, h2), h1)))

# Gluing chips of different degrees is an error that names both degrees.
try:
    multiply(h1, hook(4, 1))
except ValueError as exc:
    print("error:", exc)

# Reflection fixes every hook; rotation sends h_i to h_(n-i).
print("star(h1)   =", format_chip(star(h1)))
print("rotate(h1) =", format_chip(rotate(h1)))

# Rotation is the reflection conjugated by the antidiagonal chip.
a = alpha(3)
x = multiply(h1, h2)
print(rotate(x) == multiply(multiply(a, star(x)), a))
