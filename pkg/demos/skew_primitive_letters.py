"""
Skew-primitive letters
======================

The level-one group H_1 has a grouplike g and one letter h with
coproduct g (x) h + h (x) 1. A character is a pair (a, z) with z = chi(g) and
a = chi(h); convolution is (a, z) * (b, w) = (a + z b, z w).
"""

from charsum import character_group, cyclotomic, sigma_skew
from charsum.constructions import hn_character, hn_presentation

F = cyclotomic(4)
i = F.gen
P = hn_presentation(1)

# a character with z = i generates a cyclic group of order 4
Pi = character_group([hn_character(P, F, [1 + i], i)])
rep = sigma_skew(Pi, "h1")
print("order", len(Pi), "| sum of h:", rep.closed, "| brute:", rep.brute, "| route:", rep.path)

# the members of Pi, as (chi(g), chi(h)) pairs
for chi in Pi.elements:
    print("  g ->", chi["g"], " h ->", chi["h1"])
