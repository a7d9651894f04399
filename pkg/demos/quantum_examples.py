"""
Quantum group examples
======================

Characters of small quantum groups, Borel parts, quantum matrices and the
quantum Virasoro algebra kill every non-grouplike generator, so a sum over a
finite group of weights only sees the grouplike part of a word.
"""

from charsum import character_group, cyclotomic, qexamples, sigma_brute, validate_character

F = cyclotomic(8)
for l in (3, 4, 6, 8):
    P = qexamples.build_uql(2, l)
    print(f"u_q rank 2, l = {l}: {len(qexamples.enumerate_weights(P, F, l))} weights")

F3 = cyclotomic(3)
P = qexamples.build_quantum_gl(2)
Pi = character_group([validate_character(P, F3, {"u11": F3.gen, "u22": 1})])
for word in ("u11^3", "u11", "u12"):
    print(f"quantum GL(2), sum of {word}:", sigma_brute(Pi, word))

P = qexamples.build_virasoro()
Pi = character_group([validate_character(P, F3, {"T": F3.gen})])
for k in range(1, 7):
    print(f"Virasoro, T^{k}:", qexamples.sigma_virasoro(Pi, [("T", k)]).closed)
