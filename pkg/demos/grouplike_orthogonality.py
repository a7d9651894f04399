"""
Summing characters over grouplike words
=======================================

A finite group of characters sums to its order on a grouplike word that every
member sends to 1, and to zero on any other grouplike word.
"""

from charsum import HopfPresentation, character_group, cyclotomic, sigma_grouplike, validate_character

# Q(zeta_12) holds all twelfth roots of unity
F = cyclotomic(12)
zeta = F.gen

P = HopfPresentation.build([("K1", 0), ("K2", 6)], ())
chi = validate_character(P, F, {"K1": zeta ** 3, "K2": zeta ** 2})
Pi = character_group([chi])
print("order of the character group:", len(Pi))

# K1^4 K2^3 is sent to zeta^(12+6) = -1 by the generator, so the sum vanishes
for word in ("K1^4*K2^3", "K1^4*K2^6", "K1^2*K2^3"):
    rep = sigma_grouplike(Pi, word)
    print(f"{word:>10}: closed {rep.closed}, brute {rep.brute}, route {rep.path}")
