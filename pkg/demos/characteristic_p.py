"""
Sums in positive characteristic
===============================

In characteristic p the arithmetico-geometric sum phi(f, z) = sum_l l^f z^l
has a closed form through Eulerian numbers, and sums of products of primitive
letters over an elementary abelian p-group reduce to permanents.
"""

from charsum import modular, prime_field

p = 7
F = prime_field(p)
for f in range(1, p):
    row = [str(modular.varphi(p, f, F(z))) for z in range(p)]
    print(f"phi({f}, z) for z = 0..{p - 1}:", " ".join(row))

print("Eulerian coefficients for f0 = 4:", modular.eulerian_coeffs(4))

# in characteristic 2 the permanent and the determinant coincide
F2 = prime_field(2)
A = [[F2(1), F2(1), F2(0)], [F2(0), F2(1), F2(1)], [F2(1), F2(1), F2(1)]]
print("perm", modular.permanent(A), "det", modular.determinant(A))
