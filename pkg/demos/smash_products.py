"""
Weights of smash products with Weyl groups
==========================================

Invariance under the Weyl group kills a weight on most simple roots. Outside
characteristic 2 every root dies. In characteristic 2 a root survives when it
is the only short simple root of its component, G2 excepted.
"""

from charsum import extension_field, hecke

for text in ("A2", "B3", "C4", "F4", "G2", "B2 x A1"):
    data = hecke.RootSystemData.parse(text)
    for char in (0, 2):
        survivors = sorted(set(range(data.rank)) - hecke.killed_roots(data, char))
        print(f"{text:>8} char {char}: surviving roots {[i + 1 for i in survivors]}")

# sums of alpha^n over (Z/2)^k, grouped by the binary weight of n
F = extension_field(2, (1, 1, 0, 0, 1))
x = F.gen
for n in range(1, 9):
    rep = hecke.sigma_alpha_power([x, x ** 2 + 1], n)
    print(f"n = {n} (binary weight {bin(n).count('1')}): {rep.closed}")
