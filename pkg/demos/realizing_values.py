"""
Realizing a prescribed value
============================

Each construction builds a presentation, a finite group of characters and a
monomial whose sum equals the requested target, then confirms it by brute force.
"""

from charsum import construct_abelian, construct_cyclic, construct_lie, cyclotomic, extension_field

GF9 = extension_field(3, (1, 0, 1))
c = construct_lie(3, 4, 2, GF9.gen + 1)
print("symmetric algebra, char 3:", c.target, "->", c.brute(), "with |Pi| =", len(c.group))

Q4 = cyclotomic(4)
c = construct_cyclic(4, 3, 2 - Q4.gen)
print("cyclic group of order 4:", c.target, "->", c.brute())

c = construct_abelian([2, 4], 1, Q4(5))
print("Z/2 x Z/4 via", c.params["branch"], ":", c.target, "->", c.brute())
