"""Explicit (H, Pi, h) with a prescribed value of Sigma_Pi(h).

Three families:

* :func:`construct_lie`: primitive letters of a symmetric algebra in
  characteristic p, with Pi elementary abelian of rank k;
* :func:`construct_cyclic`: the algebra ``H_n`` (one grouplike g and letters
  h_i with Delta h_i = g (x) h_i + h_i (x) 1), with Pi cyclic of even order;
* :func:`construct_abelian`: tensor products of copies of ``H_1`` (plus a free
  grouplike block when there are fewer letters than invariant factors),
  realizing any finite abelian Pi with an even top invariant factor.

Each result carries the presentation, the group, the monomial and the
predicted value, and can check that value by brute force.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import BadChain, BadShape, CharTooSmall, ZeroTargetDisallowed
from .group import FiniteGroup, abelian_invariants
from .hopf import (
    HopfPresentation,
    Monomial,
    character_group,
    validate_character,
)
from .modular import binomial_skip_sum
from .ring import Field, FieldElement, primitive_root_of_unity
from .sums import sigma_brute, sigma_via_quotient


@dataclass
class Construction:
    presentation: HopfPresentation
    group: FiniteGroup
    monomial: Monomial
    target: FieldElement
    predicted: FieldElement
    kind: str
    params: dict = field(default_factory=dict)

    def brute(self) -> FieldElement:
        return sigma_brute(self.group, self.monomial)

    def verify(self) -> bool:
        return self.predicted == self.target and self.brute() == self.target


def hn_presentation(n: int) -> HopfPresentation:
    """H_n: grouplike g of infinite order, h_i in H_{g,1}."""
    return HopfPresentation.build(
        [("g", 0)], [(f"h{i}", "g", None) for i in range(1, n + 1)], name=f"H_{n}")


def hn_character(P: HopfPresentation, fld: Field, a, z):
    """The character (a_1, ..., a_n, z) of H_n."""
    vals = {"g": z}
    vals.update({f"h{i}": x for i, x in enumerate(a, 1)})
    return validate_character(P, fld, vals)


def construct_lie(p: int, n: int, k: int, r: FieldElement) -> Construction:
    """Sym of an n-dimensional space of primitives in characteristic p.

    The letters are split into blocks I_1, ..., I_k, with |I_j| = p - 1 for
    j > 1. gamma_j is 1 on the letters of I_j except that gamma_1(h_1) is
    (-1)^k r, and 0 elsewhere; Pi is the F_p-span of the gamma_j.
    """
    fld = r.field
    if fld.characteristic != p:
        raise BadShape(f"target lives in characteristic {fld.characteristic}, not {p}")
    if k < 1 or n < 1 or k * (p - 1) > n:
        raise BadShape("need 0 < k <= n/(p-1)")
    if n % (p - 1):
        raise BadShape(f"p - 1 = {p - 1} does not divide n = {n}")
    if n == k and p == 2 and r.is_zero():
        raise ZeroTargetDisallowed("rank would drop below k for r = 0")
    first = n - (k - 1) * (p - 1)
    blocks = [list(range(1, first + 1))]
    for j in range(1, k):
        start = first + (j - 1) * (p - 1) + 1
        blocks.append(list(range(start, start + p - 1)))
    P = HopfPresentation.build([], [(f"h{i}", None, None) for i in range(1, n + 1)],
                               name=f"Sym_{n}")
    r_prime = (-1) ** k * r
    gammas = []
    for j, block in enumerate(blocks):
        vals = {f"h{i}": fld.zero for i in range(1, n + 1)}
        for i in block:
            vals[f"h{i}"] = fld.one
        if j == 0:
            vals["h1"] = r_prime
        gammas.append(validate_character(P, fld, vals))
    Pi = character_group(gammas, cap=p ** k + 1)
    if len(Pi) != p ** k:
        raise BadShape("generators are dependent")
    mono = Monomial.of(*[f"h{i}" for i in range(1, n + 1)])
    predicted = (-1) ** k * r_prime
    return Construction(P, Pi, mono, r, predicted, "lie",
                        {"p": p, "n": n, "k": k, "blocks": blocks})


def _check_char(fld: Field, n: int):
    c = fld.characteristic
    if c and c <= 2 ** n:
        raise CharTooSmall(f"characteristic {c} must exceed 2^{n}")


def construct_cyclic(m: int, n: int, r: FieldElement) -> Construction:
    """H_n with Pi generated by (a, zeta_m), m even.

    Sigma = s m prod a_i / (1 - zeta)^n with s = sum_j C(n, m j); a_1 is solved
    for and the other a_i are 1.
    """
    fld = r.field
    if m < 2 or m % 2:
        raise BadShape("m must be even")
    if n < 1:
        raise BadShape("n must be positive")
    _check_char(fld, n)
    zeta = primitive_root_of_unity(fld, m)
    s = binomial_skip_sum(n, m)
    if fld(s * m).is_zero():
        raise CharTooSmall("s m vanishes in the field")
    a1 = r / fld(s * m) * (1 - zeta) ** n
    a = [a1] + [fld.one] * (n - 1)
    P = hn_presentation(n)
    gamma = hn_character(P, fld, a, zeta)
    Pi = character_group([gamma], cap=m + 1)
    mono = Monomial.of(*[f"h{i}" for i in range(1, n + 1)])
    predicted = fld(s * m) * a1 / (1 - zeta) ** n
    return Construction(P, Pi, mono, r, predicted, "cyclic",
                        {"m": m, "n": n, "s": s, "a": a, "zeta": zeta})


def _check_chain(d: list[int]):
    if not d:
        raise BadChain("empty chain")
    if any(x < 2 for x in d):
        raise BadChain("invariant factors must exceed 1")
    if any(d[i + 1] % d[i] for i in range(len(d) - 1)):
        raise BadChain("each invariant factor must divide the next")


def construct_abelian(d: list[int], n: int, r: FieldElement) -> Construction:
    """Pi isomorphic to Z/d_1 + ... + Z/d_k with Sigma_Pi(h) = r.

    For n >= k the letters are x_1, ..., x_{k-1} followed by x_k repeated
    n - k + 1 times, in a tensor product of k copies of H_1; the top factor
    d_k must then be even. For n < k, k - n extra grouplikes y_i carry the
    remaining cyclic factors and the sum reduces to the first n factors
    through the quotient by the subgroup they generate. When k = 1 and n > 1
    the repeated letter would force an n-th root of r, so the n letters are
    taken from H_n instead (the cyclic construction).
    """
    d = list(d)
    _check_chain(d)
    k = len(d)
    fld = r.field
    top = d[-1]
    if n >= k and top % 2:
        raise BadChain("the top invariant factor must be even")
    if n < 1:
        raise BadShape("n must be positive")
    order = math.prod(d)
    if fld.characteristic and order % fld.characteristic == 0:
        raise CharTooSmall("characteristic divides |Pi|")
    zeta = primitive_root_of_unity(fld, top)
    zetas = [zeta ** (top // di) for di in d]

    if k == 1 and n > 1:
        c = construct_cyclic(top, n, r)
        c.kind = "abelian"
        c.params.update({"d": d, "branch": "cyclic"})
        return c

    if n >= k:
        size = binomial_skip_sum(n - k + 1, top)
        coeff = fld((-1) ** n * order * size)
        if coeff.is_zero():
            raise CharTooSmall("the sum's coefficient vanishes in the field")
        # with every a_i = 1 the sum would be `base`; it is linear in a_1
        # because x_1 occurs once (k >= 2) or is the single letter (k = n = 1)
        base = coeff / (zeta - 1) ** (n - k + 1)
        for zi in zetas[:k - 1]:
            base = base / (zi - 1)
        a = [r / base] + [fld.one] * (k - 1)
        P = HopfPresentation.build(
            [(f"g{i}", 0) for i in range(1, k + 1)],
            [(f"x{i}", f"g{i}", None) for i in range(1, k + 1)],
            name=f"H_1^{k}")
        gammas = []
        for i in range(k):
            vals = {}
            for j in range(k):
                vals[f"g{j + 1}"] = zetas[i] if i == j else fld.one
                vals[f"x{j + 1}"] = a[i] if i == j else fld.zero
            gammas.append(validate_character(P, fld, vals))
        letters = [f"x{i}" for i in range(1, k)] + [f"x{k}"] * (n - k + 1)
        mono = Monomial.of(*letters)
        predicted = coeff
        for i in range(k - 1):
            predicted = predicted * a[i] / (zetas[i] - 1)
        predicted = predicted * (a[k - 1] / (zeta - 1)) ** (n - k + 1)
        Pi = character_group(gammas, cap=order + 1)
        params = {"d": d, "n": n, "a": a, "branch": "tensor", "subsets": size}
        return Construction(P, Pi, mono, r, predicted, "abelian", params)

    # n < k: factors n+1..k move to free grouplikes y_1..y_{k-n}
    coeff = fld(order)
    for zi in zetas[1:n]:
        coeff = coeff / (1 - zi)
    a1 = r / coeff * (1 - zetas[0])
    a = [a1] + [fld.one] * (n - 1)
    P = HopfPresentation.build(
        [(f"g{i}", 0) for i in range(1, n + 1)] + [(f"y{i}", 0) for i in range(1, k - n + 1)],
        [(f"x{i}", f"g{i}", None) for i in range(1, n + 1)],
        name=f"RG'(x)H_1^{n}")
    gammas = []
    for i in range(k):
        vals = {f"g{j}": fld.one for j in range(1, n + 1)}
        vals.update({f"x{j}": fld.zero for j in range(1, n + 1)})
        vals.update({f"y{j}": fld.one for j in range(1, k - n + 1)})
        if i < n:
            vals[f"g{i + 1}"] = zetas[i]
            vals[f"x{i + 1}"] = a[i]
        else:
            vals[f"y{i - n + 1}"] = zetas[i]
        gammas.append(validate_character(P, fld, vals))
    Pi = character_group(gammas, cap=order + 1)
    mono = Monomial.of(*[f"x{i}" for i in range(1, n + 1)])
    predicted = fld(order)
    for i in range(n):
        predicted = predicted * a[i] / (1 - zetas[i])
    params = {"d": d, "n": n, "a": a, "branch": "free_block",
              "normal_generators": gammas[n:]}
    return Construction(P, Pi, mono, r, predicted, "abelian", params)


def quotient_check(c: Construction, resamples: int = 0) -> bool:
    """For the free-block branch: Sigma_Pi = |N| Sigma over Pi/N with N = <gamma_{n+1..k}>."""
    gens = c.params.get("normal_generators")
    if not gens:
        return True
    N = character_group(gens, cap=len(c.group) + 1)
    rep = sigma_via_quotient(c.group, N, c.monomial, resamples=resamples)
    return rep.agree and all(rep.checks.values()) and rep.closed == c.target


def group_matches_chain(c: Construction, d: list[int]) -> bool:
    """Pi has invariant factors d (checked on its multiplication table)."""
    return abelian_invariants(c.group) == list(d)
