"""Abelian groups of characters and positive characteristic.

The pieces here are:

* the polynomial ``phi_p(f, z) = sum_{l=1}^{p} (l^f mod p) z^l`` with its
  factorized closed form built from Eulerian numbers;
* multinomial coefficients modulo p and a recursive divisibility test;
* permanents (Ryser), used when the number of letters equals the rank of an
  elementary abelian p-group;
* closed forms for sums of skew-primitive products over abelian groups and
  over groups whose letters are pseudo-primitive in characteristic p.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Sequence

from .errors import (
    CharDividesOrder,
    NotAbelian,
    NotPrime,
    NotPseudoPrimitive,
    NotSquare,
    OracleMismatch,
    PseudoPrimitiveLetter,
    TooManyLetters,
    WrongCharacteristic,
)
from .group import (
    FiniteGroup,
    commutator_subgroup,
    hall_complement,
    independent_generators,
    quotient_group,
    sylow_subgroup,
)
from .hopf import Monomial, field_of, presentation_of
from .ring import Field, FieldElement, cyclotomic, is_prime, prime_field
from .sums import (
    SigmaReport,
    _lifted_generators,
    _report,
    _skew_product,
    combined_words,
    is_pseudo_primitive,
    sigma_brute,
)


# ---------------------------------------------------------------------- phi

def _as_char_p(p: int, z) -> FieldElement:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if isinstance(z, FieldElement):
        if z.field.characteristic != p:
            raise WrongCharacteristic(f"{z.field} does not have characteristic {p}")
        return z
    return prime_field(p)(z)


def varphi_direct(p: int, f: int, z) -> FieldElement:
    """sum_{l=1}^{p} (l^f mod p) z^l, with 0^0 read as 1."""
    if f < 0:
        raise ValueError("f must be non-negative")
    z = _as_char_p(p, z)
    total = z.field.zero
    power = z.field.one
    for l in range(1, p + 1):
        power = power * z
        c = pow(l, f, p) if f else 1
        if c:
            total = total + c * power
    return total


def _binomial_at(x: Fraction, k: int) -> Fraction:
    """Binomial polynomial C(x, k) evaluated at a rational x."""
    out = Fraction(1)
    for j in range(k):
        out *= x - j
    return out / math.factorial(k)


def eulerian_coeffs(f0: int) -> tuple[int, ...]:
    """alpha_0..alpha_{f0-1} with sum_i alpha_i C(X + f0 - 1 - i, f0) = X^f0.

    Solved triangularly from X = 1, ..., f0 over exact rationals, then checked
    at the f0 + 1 half-integers 1/2, ..., f0 + 1/2 and required to be integral.
    """
    if f0 < 1:
        raise ValueError("f0 must be positive")
    alphas: list[Fraction] = []
    for l in range(1, f0 + 1):
        acc = Fraction(l ** f0)
        for i, a in enumerate(alphas):
            acc -= a * _binomial_at(Fraction(l + f0 - 1 - i), f0)
        alphas.append(acc)  # the new term's binomial is C(f0, f0) = 1
    for j in range(f0 + 1):
        X = Fraction(2 * j + 1, 2)
        lhs = sum(a * _binomial_at(X + f0 - 1 - i, f0) for i, a in enumerate(alphas))
        if lhs != X ** f0:
            raise OracleMismatch(f"Eulerian identity fails at X={X}")
    if any(a.denominator != 1 for a in alphas):
        raise OracleMismatch("non-integral Eulerian coefficient")
    return tuple(int(a) for a in alphas)


def reduced_exponent(p: int, f: int) -> int:
    """f0 with f0 = f mod (p - 1) and 0 < f0 < p, for f > 0."""
    return (f - 1) % (p - 1) + 1


def varphi_closed(p: int, f: int, z) -> FieldElement:
    """z (1 - z)^(p - 1 - f0) g_{f0-1}(z) with g the Eulerian polynomial.

    At f = 0 the sum is the geometric series z + ... + z^p, which in
    characteristic p equals z (1 - z)^(p - 1).
    """
    z = _as_char_p(p, z)
    if f == 0:
        return z * (1 - z) ** (p - 1)
    f0 = reduced_exponent(p, f)
    g = z.field.zero
    for i, a in enumerate(eulerian_coeffs(f0)):
        g = g + a * z ** i
    return z * (1 - z) ** (p - 1 - f0) * g


def varphi(p: int, f: int, z) -> FieldElement:
    """phi_p(f, z), computed directly and by the closed form; both must agree."""
    a = varphi_direct(p, f, z)
    b = varphi_closed(p, f, z)
    if a != b:
        raise OracleMismatch(f"phi_{p}({f}, {z}): direct {a} != closed {b}")
    return a


# ------------------------------------------------------------ multinomials

def multinomial_exact(parts: Sequence[int]) -> int:
    out = math.factorial(sum(parts))
    for l in parts:
        out //= math.factorial(l)
    return out


def multinomial_mod(p: int, parts: Sequence[int]) -> int:
    """(l_1 + ... + l_k)! / prod l_i!  mod p, digit by digit in base p."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if any(l < 0 for l in parts):
        raise ValueError("parts must be non-negative")
    rest = list(parts)
    out = 1
    while any(rest):
        digits = [l % p for l in rest]
        s = sum(digits)
        if s >= p:  # a carry: p divides the coefficient
            return 0
        out = out * multinomial_exact(digits) % p
        rest = [l // p for l in rest]
    return out


def lnom_divisible(p: int, parts: Sequence[int]) -> bool:
    """Divisibility of the multinomial by p, decided by peeling off powers of p.

    With p^s <= n < p^(s+1): if every part is below p^s, p divides; otherwise
    removing p^s from the largest part does not change divisibility.
    """
    parts = list(parts)
    n = sum(parts)
    while n:
        s = 0
        while p ** (s + 1) <= n:
            s += 1
        k = max(range(len(parts)), key=lambda i: parts[i])
        if parts[k] < p ** s:
            return True
        parts[k] -= p ** s
        n -= p ** s
    return False


# --------------------------------------------------------------- permanents

def _check_square(A) -> int:
    n = len(A)
    if any(len(row) != n for row in A):
        raise NotSquare("matrix is not square")
    return n


def _zero_like(A):
    return A[0][0] * 0 if A and A[0] else 0


def permanent_direct(A) -> object:
    n = _check_square(A)
    if n == 0:
        return 1
    total = _zero_like(A)
    for sigma in itertools.permutations(range(n)):
        term = A[0][sigma[0]]
        for i in range(1, n):
            term = term * A[i][sigma[i]]
        total = total + term
    return total


def permanent(A) -> object:
    """Ryser's inclusion-exclusion formula; cross-checked by direct expansion for n <= 6."""
    n = _check_square(A)
    if n == 0:
        return 1
    zero = _zero_like(A)
    total = zero
    for mask in range(1, 1 << n):
        cols = [j for j in range(n) if mask >> j & 1]
        prod = None
        for i in range(n):
            row_sum = zero
            for j in cols:
                row_sum = row_sum + A[i][j]
            prod = row_sum if prod is None else prod * row_sum
        if (n - len(cols)) % 2:
            total = total - prod
        else:
            total = total + prod
    if n <= 6 and permanent_direct(A) != total:
        raise OracleMismatch("Ryser and direct permanents disagree")
    return total


def determinant(A) -> object:
    """Gaussian elimination over a field (ints are promoted to Fractions)."""
    n = _check_square(A)
    M = [[Fraction(x) if isinstance(x, int) else x for x in row] for row in A]
    if n == 0:
        return 1
    det = M[0][0] * 0 + 1
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c] != 0), None)
        if piv is None:
            return M[0][0] * 0
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det = det * M[c][c]
        inv = 1 / M[c][c]
        for r in range(c + 1, n):
            factor = M[r][c] * inv
            if factor != 0:
                M[r] = [a - factor * b for a, b in zip(M[r], M[c])]
    return det


# ------------------------------------------------------------- abelian sums

def _split_monomials(P, skews, J):
    first = []
    for i, s in enumerate(skews):
        if i in J:
            first.extend(s.g)
        else:
            first.append((s.name, 1))
    second = [(skews[i].name, 1) for i in sorted(J)]
    return Monomial(tuple(first)), Monomial(tuple(second))


def _p_parts(Pi: FiniteGroup, p: int):
    if p and len(Pi) % p == 0:
        return sylow_subgroup(Pi, p), hall_complement(Pi, p)
    return Pi.subgroup([0]), Pi


def sigma_abelian_split(Pi: FiniteGroup, m, brute: bool = True) -> SigmaReport:
    """Split an abelian Pi into its Sylow p-part and complement.

    With J the pseudo-primitive letters,
    Sigma_Pi(h) = Sigma_{Pi'}(g_J h_rest) * Sigma_{Pi_p}(h_J).
    """
    if not Pi.is_abelian():
        raise NotAbelian("the split needs an abelian group")
    P = presentation_of(Pi)
    p = field_of(Pi).characteristic
    mono, skews = _skew_product(P, m)
    J = {i for i, s in enumerate(skews) if is_pseudo_primitive(Pi, s)}
    Pp, Pc = _p_parts(Pi, p)
    first, second = _split_monomials(P, skews, J)
    closed = sigma_brute(Pc, first) * sigma_brute(Pp, second)
    return _report(Pi, mono, closed, "abelian.split", brute=brute)


def sigma_abelian_closed(Pi: FiniteGroup, m, brute: bool = True) -> SigmaReport:
    """Closed form when no letter is pseudo-primitive and char does not divide |Pi|.

    Sigma = (-1)^n |Pi| prod f_i sum_{I in S} (-1)^|I|, where f_i is the level
    of h_i and S collects the subsets I with g_I g'_rest in G_Pi.
    """
    if not Pi.is_abelian():
        raise NotAbelian("closed form needs an abelian group")
    P = presentation_of(Pi)
    F = field_of(Pi)
    p = F.characteristic
    if p and len(Pi) % p == 0:
        raise CharDividesOrder(f"characteristic {p} divides |Pi| = {len(Pi)}")
    mono, skews = _skew_product(P, m)
    n = len(skews)
    gens = _lifted_generators(Pi)
    levels = []
    constant = True
    witnesses = []
    for s in skews:
        cands = gens + list(Pi.elements)
        beta = next((b for b in cands if b.word_value(s.g) != b.word_value(s.gp)), None)
        if beta is None:
            raise PseudoPrimitiveLetter(f"{s.name} is pseudo-primitive for Pi")
        f = beta[s.name] / (beta.word_value(s.g) - beta.word_value(s.gp))
        for b in Pi.elements:
            d = b.word_value(s.g) - b.word_value(s.gp)
            if d and b[s.name] / d != f:
                constant = False
        levels.append(f)
        witnesses.append((beta, f))
    signed = 0
    for mask in range(1 << n):
        pairs = []
        for i, s in enumerate(skews):
            pairs.extend(s.g if mask >> i & 1 else s.gp)
        word = P.word(pairs)
        if all(b.word_value(word) == 1 for b in gens):
            signed += -1 if bin(mask).count("1") % 2 else 1
    closed = F((-1) ** n * len(Pi) * signed)
    for f in levels:
        closed = closed * f
    return _report(Pi, mono, closed, "Tabel", witnesses,
                   {"level_constant": constant}, brute=brute)


# ------------------------------------------------- pseudo-primitive, char p

def elementary_basis(Pp: FiniteGroup, p: int) -> list[int]:
    basis = independent_generators(Pp)
    if p ** len(basis) != len(Pp):
        raise ValueError("group is not elementary abelian")
    return basis


def sigma_elementary(Pp: FiniteGroup, m) -> tuple[FieldElement, str, dict]:
    """Sum over an elementary abelian p-group of pseudo-primitive letters.

    The members are a_1 gamma_1 + ... + a_k gamma_k; expanding the product of
    letters groups the terms by how many letters each gamma_j receives, and the
    sum over a_j of a_j^c is phi_p(c, gamma_j(g)). Terms in which some gamma_j
    receives no letter vanish, which reduces the k = n case to a permanent.
    """
    P = presentation_of(Pp)
    F = field_of(Pp)
    p = F.characteristic
    mono, skews = _skew_product(P, m)
    n = len(skews)
    if n > 10:
        raise TooManyLetters("at most 10 letters")
    basis = [Pp.elements[i] for i in elementary_basis(Pp, p)]
    k = len(basis)
    g, _ = combined_words(P, skews)
    gvals = [gam.word_value(g) for gam in basis]
    checks = {"basis_trivial_on_g": all(v == 1 for v in gvals)}
    A = [[gam[s.name] / gam.word_value(s.g) for gam in basis] for s in skews]
    if k > n:
        value, path = F.zero, "T8.rank_exceeds"
    elif k == n:
        value = permanent(A)
        for v in gvals:
            value = value * varphi(p, 1, v)
        path = "T8.permanent"
    else:
        coeffs: dict[tuple[int, ...], FieldElement] = {(0,) * k: F.one}
        for row in A:
            nxt: dict[tuple[int, ...], FieldElement] = {}
            for key, c in coeffs.items():
                for j, a in enumerate(row):
                    if a:
                        kk = key[:j] + (key[j] + 1,) + key[j + 1:]
                        nxt[kk] = nxt.get(kk, F.zero) + c * a
            coeffs = nxt
        value = F.zero
        for key, c in coeffs.items():
            term = c
            for cj, v in zip(key, gvals):
                term = term * varphi(p, cj, v)
                if not term:
                    break
            value = value + term
        path = "T8.expansion"
    if value:
        checks["nonzero_shape"] = (n % (p - 1) == 0) and k * (p - 1) <= n
    return value, path, checks


def sigma_pseudo_charp(Pi: FiniteGroup, m, brute: bool = True) -> SigmaReport:
    """Characteristic p, every letter pseudo-primitive.

    The sum vanishes when the Sylow p-subgroup is trivial, has an element of
    order p^2, or meets the commutator subgroup. Otherwise it factors as
    |[Pi,Pi]| * Sigma_{Phi'}(g) * Sigma_{Pi_p}(h), with Phi' the p'-part of the
    abelianization.
    """
    P = presentation_of(Pi)
    F = field_of(Pi)
    p = F.characteristic
    if p == 0:
        raise WrongCharacteristic("positive characteristic required")
    mono, skews = _skew_product(P, m)
    for s in skews:
        if not is_pseudo_primitive(Pi, s):
            raise NotPseudoPrimitive(f"{s.name} is not pseudo-primitive for Pi")
    Pp = sylow_subgroup(Pi, p)
    if len(Pp) == 1:
        return _report(Pi, mono, F.zero, "T6.no_p_part", brute=brute)
    for i in range(1, len(Pp)):
        if Pp.order_of(i) % (p * p) == 0:
            return _report(Pi, mono, F.zero, "T6.not_elementary", brute=brute)
    D = commutator_subgroup(Pi)
    if len(set(D.elements) & set(Pp.elements)) > 1:
        return _report(Pi, mono, F.zero, "T6.meets_commutator", brute=brute)
    Phi = quotient_group(Pi, D)
    Phi_c = hall_complement(Phi, p)
    g, _ = combined_words(P, skews)
    sig_g = F.zero
    for chi in Phi_c.elements:
        sig_g = sig_g + chi.word_value(g)
    sig_h, path, checks = sigma_elementary(Pp, mono)
    closed = F(len(D)) * sig_g * sig_h
    return _report(Pi, mono, closed, f"T6.{path}", checks=checks, brute=brute)


def binomial_skip_sum(n: int, m: int) -> int:
    """sum_j C(n, m j), checked against the roots-of-unity filter in Q(zeta_m)."""
    if n < 0 or m < 1:
        raise ValueError("need n >= 0 and m >= 1")
    direct = sum(math.comb(n, j) for j in range(0, n + 1, m))
    F: Field = cyclotomic(m)
    z = F.gen
    filt = F.zero
    for k in range(m):
        filt = filt + (1 + z ** k) ** n
    if filt / m != direct:
        raise OracleMismatch(f"skip sum filter disagrees for n={n}, m={m}")
    return direct
