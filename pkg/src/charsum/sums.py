"""Sums of characters over finite groups of characters.

For a finite group Pi of characters and an element x of H, the sum
``Sigma_Pi(x) = sum over gamma in Pi of gamma(x)`` is computed twice: once by
brute force and once by a closed form chosen from the structure of Pi and x.
Every entry point returns a :class:`SigmaReport` holding both values and the
name of the closed form that fired.

Terminology used throughout:

* ``G_Pi``: grouplikes on which every member of Pi is 1;
* a skew-primitive letter ``h`` in ``H_{g,g'}`` is *pseudo-primitive* for Pi
  when every member agrees on g and g', and *almost primitive* when both
  words lie in ``G_Pi``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    FactorConditionFails,
    InvalidMonomial,
    NotDirect,
    NotInNh,
    NotNormal,
    NotStabilizing,
    OracleMismatch,
)
from .group import (
    FiniteGroup,
    closure,
    commutator_subgroup,
    independent_generators,
    is_normal,
    quotient_group,
    sylow_subgroup,
)
from .hopf import (
    ANNIHILATED,
    GROUPLIKE,
    SKEW,
    Character,
    HopfPresentation,
    Monomial,
    SkewPrimitive,
    Word,
    char_eval,
    char_inverse,
    convolve,
    delta_power_eval,
    field_of,
    presentation_of,
    word_mul,
)
from .ring import FieldElement


@dataclass
class SigmaReport:
    brute: FieldElement | None
    closed: FieldElement | None
    path: str
    witnesses: list[tuple[Character, FieldElement]] = field(default_factory=list)
    checks: dict[str, bool] = field(default_factory=dict)
    order: int = 0

    @property
    def agree(self) -> bool | None:
        """Brute force equals the closed form (vacuous when no closed form applies)."""
        if self.brute is None:
            return None
        return self.closed is None or self.brute == self.closed

    @property
    def consistent(self) -> bool:
        return self.agree is not False and all(self.checks.values())

    @property
    def value(self) -> FieldElement:
        return self.closed if self.closed is not None else self.brute

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "brute": None if self.brute is None else str(self.brute),
            "closed": None if self.closed is None else str(self.closed),
            "path": self.path,
            "agree": self.agree,
            "checks": dict(sorted(self.checks.items())),
            "witnesses": [{"character": {k: str(v) for k, v in w.as_dict().items()},
                           "value": str(v)} for w, v in self.witnesses],
        }


def _report(Pi, m, closed, path, witnesses=(), checks=None, brute=True) -> SigmaReport:
    return SigmaReport(
        brute=sigma_brute(Pi, m) if brute else None,
        closed=closed,
        path=path,
        witnesses=list(witnesses),
        checks=dict(checks or {}),
        order=len(Pi),
    )


# ------------------------------------------------------------------ basics

def sigma_brute(Pi: FiniteGroup, m) -> FieldElement:
    """Sum of gamma(m) over every gamma in Pi."""
    total = field_of(Pi).zero
    for chi in Pi.elements:
        total = total + char_eval(chi, m)
    return total


def _monomial(P: HopfPresentation, m) -> Monomial:
    return P.monomial(m)


def _word(P: HopfPresentation, g) -> Word:
    return P.word(g)


def word_in_G_Pi(Pi: FiniteGroup, word: Word) -> bool:
    return all(chi.word_value(word) == 1 for chi in Pi.elements)


@dataclass
class GPiMembership:
    element: Word
    in_G_Pi: bool
    witness: Character | None = None
    witness_value: FieldElement | None = None


def _scan_membership(Pi, word):
    for chi in Pi.elements:
        v = chi.word_value(word)
        if v != 1:
            return chi, v
    return None


def _lifted_generators(Pi: FiniteGroup) -> list[Character]:
    """Lifts of a generating set of Pi/[Pi,Pi]."""
    if Pi.is_abelian():
        gens = Pi.generators or independent_generators(Pi)
        return [Pi.elements[i] for i in gens]
    Q = quotient_group(Pi, commutator_subgroup(Pi))
    return [Q.elements[i] for i in independent_generators(Q)]


def membership_GPi(Pi: FiniteGroup, g, strategy: str = "both") -> GPiMembership:
    """Whether every member of Pi is 1 on the grouplike word ``g``.

    ``strategy`` is ``scan`` (all of Pi), ``lifted`` (lifted generators of the
    abelianization, enough since character values on grouplikes commute) or
    ``both``, which runs the two and insists they agree.
    """
    word = _word(presentation_of(Pi), g)
    found = None
    if strategy in ("scan", "both"):
        found = _scan_membership(Pi, word)
    if strategy in ("lifted", "both"):
        lifted = None
        for chi in _lifted_generators(Pi):
            v = chi.word_value(word)
            if v != 1:
                lifted = (chi, v)
                break
        if strategy == "lifted":
            found = lifted
        elif (found is None) != (lifted is None):
            raise OracleMismatch("G_Pi membership strategies disagree")
    if found is None:
        return GPiMembership(word, True)
    return GPiMembership(word, False, found[0], found[1])


def sigma_grouplike(Pi: FiniteGroup, g, brute: bool = True) -> SigmaReport:
    """Orthogonality: |Pi| on G_Pi, zero elsewhere."""
    P = presentation_of(Pi)
    word = _word(P, g)
    mem = membership_GPi(Pi, word, "both" if brute else "scan")
    mono = Monomial.from_word(word)
    if mem.in_G_Pi:
        return _report(Pi, mono, field_of(Pi)(len(Pi)), "P5.trivial", brute=brute)
    return _report(Pi, mono, field_of(Pi).zero, "P5.nontrivial",
                   [(mem.witness, mem.witness_value)], brute=brute)


def _single_skew(P: HopfPresentation, h) -> SkewPrimitive:
    if isinstance(h, SkewPrimitive):
        return h
    if isinstance(h, str) and h.strip() in P.generator_names and P.kind(h.strip()) == SKEW:
        return P.skew(h.strip())
    mono = _monomial(P, h)
    if len(mono) != 1 or P.kind(mono.letters[0][0]) != SKEW:
        raise InvalidMonomial(f"{mono} is not a single skew-primitive letter")
    return P.skew(mono.letters[0][0])


def is_pseudo_primitive(Pi: FiniteGroup, s: SkewPrimitive) -> bool:
    return all(chi.word_value(s.g) == chi.word_value(s.gp) for chi in Pi.elements)


def is_almost_primitive(Pi: FiniteGroup, s: SkewPrimitive) -> bool:
    return word_in_G_Pi(Pi, s.g) and word_in_G_Pi(Pi, s.gp)


def _involution_sum(Pi: FiniteGroup, m) -> FieldElement:
    t = Pi.table
    total = field_of(Pi).zero
    for i in range(1, len(Pi)):
        if t[i][i] == 0:
            total = total + char_eval(Pi.elements[i], m)
    return total


def sigma_skew(Pi: FiniteGroup, h, brute: bool = True) -> SigmaReport:
    """Sum over Pi of a single skew-primitive letter h in H_{g,g'}."""
    P = presentation_of(Pi)
    F = field_of(Pi)
    s = _single_skew(P, h)
    mono = Monomial.of(s.name)
    orders = dict(P.grouplikes)
    ggp = word_mul(s.g, s.gp, orders)
    for lam in Pi.elements:
        if lam.word_value(s.g) != 1 and lam.word_value(s.gp) != 1:
            return _report(Pi, mono, F.zero, "T3.case1", [(lam, lam[s.name])], brute=brute)
    g_in = word_in_G_Pi(Pi, s.g)
    gp_in = word_in_G_Pi(Pi, s.gp)
    n = F(len(Pi))
    if g_in != gp_in:
        values = []
        for lam in Pi.elements:
            d = lam.word_value(ggp)
            if d != 1:
                values.append((lam, n * lam[s.name] / (1 - d)))
        closed = values[0][1]
        checks = {"witness_independent": all(v == closed for _, v in values)}
        return _report(Pi, mono, closed, "T3.case2", values[:1], checks, brute=brute)
    # both g and g' lie in G_Pi, so lambda(gg') = 1 for every lambda
    inv_sum = _involution_sum(Pi, mono)
    checks = {"twice_sum_zero": 2 * inv_sum == 0}
    if F.characteristic != 2:
        return _report(Pi, mono, inv_sum, "T3.case3", checks=checks, brute=brute)
    closed, path, wit = _char2_almost_primitive(Pi, mono)
    checks["involution_formula"] = closed == inv_sum
    return _report(Pi, mono, closed, path, wit, checks, brute=brute)


def _char2_almost_primitive(Pi, mono):
    """Characteristic 2, almost primitive letter: decided by |Pi| mod 4."""
    F = field_of(Pi)
    n = len(Pi)
    if n % 2:
        return F.zero, "Tunproved.odd", []
    if n % 4 == 0:
        return F.zero, "Tunproved.four", []
    t = Pi.table
    for i in range(1, n):
        if t[i][i] == 0:
            chi = Pi.elements[i]
            v = char_eval(chi, mono)
            return v, "Tunproved.order2", [(chi, v)]
    raise AssertionError("even order group without an involution")


def level_function(chi: Character, h) -> FieldElement:
    """chi(h) / (chi(g) - chi(g')), defined when chi(g) != chi(g')."""
    s = _single_skew(chi.presentation, h)
    d = chi.word_value(s.g) - chi.word_value(s.gp)
    if d.is_zero():
        raise NotInNh(f"character takes equal values on both sides of {s.name}")
    return chi[s.name] / d


def pseudo_primitive_power(chi: Character, h, m: int) -> tuple[FieldElement, FieldElement]:
    """(chi^{*m}(h), m chi(g)^{m-1} chi(h)); equal when chi(g) = chi(g')."""
    s = _single_skew(chi.presentation, h)
    power = chi
    for _ in range(m - 1):
        power = convolve(power, chi)
    rhs = m * chi.word_value(s.g) ** (m - 1) * chi[s.name]
    return power[s.name], rhs


# ------------------------------------------------------- products of skews

def _skew_product(P: HopfPresentation, m) -> tuple[Monomial, list[SkewPrimitive]]:
    mono = _monomial(P, m)
    skews = []
    for nm, _ in mono.letters:
        if P.kind(nm) != SKEW:
            raise InvalidMonomial(f"{nm} is not skew-primitive")
        skews.append(P.skew(nm))
    if not skews:
        raise InvalidMonomial("empty product of skew-primitives")
    return mono, skews


def combined_words(P: HopfPresentation, skews: Sequence[SkewPrimitive]) -> tuple[Word, Word]:
    orders = dict(P.grouplikes)
    g, gp = (), ()
    for s in skews:
        g = word_mul(g, s.g, orders)
        gp = word_mul(gp, s.gp, orders)
    return g, gp


def sigma_product_general(Pi: FiniteGroup, m, brute: bool = True) -> SigmaReport:
    """Sum of a product h_1...h_n of skew-primitive letters.

    Every applicable closed form is evaluated; the first in dispatch order
    becomes ``closed`` and the others are recorded as agreement checks.
    """
    from . import modular

    P = presentation_of(Pi)
    F = field_of(Pi)
    p = F.characteristic
    mono, skews = _skew_product(P, m)
    g, gp = combined_words(P, skews)
    n = len(skews)
    found: list[tuple[str, FieldElement, list]] = []

    for lam in Pi.elements:
        if all(lam[s.name].is_zero() for s in skews) and (
                lam.word_value(g) != 1 or lam.word_value(gp) != 1):
            found.append(("Prod.zero_letters", F.zero, [(lam, F.zero)]))
            break

    if p and len(Pi) % p == 0:
        Pp = sylow_subgroup(Pi, p)
        for i in range(1, len(Pp)):
            if Pp.order_of(i) % (p * p) == 0:
                chi = Pp.elements[i]
                found.append(("Tskew", F.zero, [(chi, char_eval(chi, mono))]))
                break

    pseudo = [s for s in skews if is_pseudo_primitive(Pi, s)]
    if (p == 0 or len(Pi) % p) and pseudo:
        found.append(("P7", F.zero, []))

    ggp = word_mul(g, gp, dict(P.grouplikes))
    if word_in_G_Pi(Pi, ggp) and (p == 2 or n % 2 == 1):
        inv_sum = _involution_sum(Pi, mono)
        found.append(("Prod.involutions", inv_sum, []))

    if Pi.is_abelian():
        found.append(("abelian.split", modular.sigma_abelian_split(Pi, mono).closed, []))
        if (p == 0 or len(Pi) % p) and not pseudo:
            found.append(("Tabel", modular.sigma_abelian_closed(Pi, mono).closed, []))
    if p and len(pseudo) == n:
        found.append(("T6", modular.sigma_pseudo_charp(Pi, mono).closed, []))

    if not found:
        return _report(Pi, mono, None, "none", brute=brute)
    path, closed, wit = found[0]
    checks = {f"agrees:{q}": v == closed for q, v, _ in found[1:]}
    if path == "Prod.involutions":
        checks["twice_sum_zero"] = 2 * closed == 0
    return _report(Pi, mono, closed, path, wit, checks, brute=brute)


def sigma_auto(Pi: FiniteGroup, m, brute: bool = True) -> SigmaReport:
    """Route a monomial to the matching closed form."""
    P = presentation_of(Pi)
    mono = _monomial(P, m)
    kinds = {P.kind(nm) for nm, _ in mono.letters}
    if ANNIHILATED in kinds:
        return _report(Pi, mono, field_of(Pi).zero, "annihilated", brute=brute)
    if kinds <= {GROUPLIKE}:
        return sigma_grouplike(Pi, P.word(mono), brute=brute)
    if kinds == {SKEW}:
        if len(mono) == 1:
            return sigma_skew(Pi, mono, brute=brute)
        return sigma_product_general(Pi, mono, brute=brute)
    return _report(Pi, mono, None, "none", brute=brute)


# ---------------------------------------------------------------- stabilizers

@dataclass
class Stabilizer:
    group: FiniteGroup
    fixed: FiniteGroup | None = None


def _stabilizer_indices(Pi: FiniteGroup, m) -> frozenset[int]:
    t = Pi.table
    vals = [char_eval(chi, m) for chi in Pi.elements]
    n = len(Pi)
    out = []
    for c in range(n):
        ok = True
        for b in range(n):
            bc = t[b][c]
            row_bc, row_b = t[bc], t[b]
            for d in range(n):
                if vals[row_bc[d]] != vals[row_b[d]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(c)
    return frozenset(out)


def _fixes_letter(chi: Character, P: HopfPresentation, nm: str, e: int) -> bool:
    """gamma restricted to the subcoalgebra spanned by the letter equals the counit."""
    kind = P.kind(nm)
    if kind == GROUPLIKE:
        return chi[nm] ** e == 1
    if kind == SKEW:
        s = P.skew(nm)
        return chi[nm].is_zero() and chi.word_value(s.g) == 1 and chi.word_value(s.gp) == 1
    return False


def stabilizer_in_Pi(Pi: FiniteGroup, m) -> Stabilizer:
    """{gamma : (beta*gamma*delta)(m) = (beta*delta)(m) for all beta, delta in Pi}.

    For a single letter the subgroup of Pi that acts as the counit on the
    letter's subcoalgebra is returned too, after checking it against the
    intersection of the stabilizers of the letter and of its two words.
    """
    P = presentation_of(Pi)
    mono = _monomial(P, m)
    stab = Pi.subgroup(_stabilizer_indices(Pi, mono))
    fixed = None
    if len(mono) == 1:
        nm, e = mono.letters[0]
        direct = frozenset(i for i, chi in enumerate(Pi.elements) if _fixes_letter(chi, P, nm, e))
        if P.kind(nm) == SKEW:
            s = P.skew(nm)
            via = _stabilizer_indices(Pi, mono)
            via &= _stabilizer_indices(Pi, Monomial.from_word(s.g))
            via &= _stabilizer_indices(Pi, Monomial.from_word(s.gp))
            if via != direct:
                raise OracleMismatch("two descriptions of the letter's fixer disagree")
        fixed = Pi.subgroup(direct)
    return Stabilizer(stab, fixed)


def sigma_via_quotient(Pi: FiniteGroup, N: FiniteGroup, m, resamples: int = 0,
                       rng: random.Random | None = None, brute: bool = True) -> SigmaReport:
    """|N| times the sum over coset representatives of a normal N inside the stabilizer."""
    P = presentation_of(Pi)
    mono = _monomial(P, m)
    members = Pi.indices_of(N)
    Nsub = Pi.subgroup(members)
    if not is_normal(Pi, Nsub):
        raise NotNormal("N is not normal in Pi")
    stab = _stabilizer_indices(Pi, mono)
    if not members <= stab:
        raise NotStabilizing("N is not contained in the stabilizer of m")
    Q = quotient_group(Pi, Nsub)
    F = field_of(Pi)

    def over(reps):
        total = F.zero
        for r in reps:
            total = total + char_eval(Pi.elements[r], mono)
        return F(len(Nsub)) * total

    closed = over(Q.reps)
    checks = {}
    if resamples:
        rng = rng or random.Random(0)
        checks["lift_independent"] = all(
            over([rng.choice(c) for c in Q.cosets]) == closed for _ in range(resamples))
    return _report(Pi, mono, closed, "L1", checks=checks, brute=brute)


def in_gamma_prime(chi: Character, m) -> bool:
    """Sufficient test that chi is the counit on the subcoalgebra of m (letter by letter)."""
    P = chi.presentation
    mono = _monomial(P, m)
    return all(_fixes_letter(chi, P, nm, e) for nm, e in mono.letters)


def sigma_direct_product(factors: Sequence[FiniteGroup], letters: Sequence,
                         brute: bool = True) -> SigmaReport:
    """Pi = Pi_1 x ... x Pi_k with Pi_i fixing h_j for i != j: Sigma = prod Sigma_{Pi_i}(h_i)."""
    if len(factors) != len(letters):
        raise ValueError("need one letter per factor")
    P = presentation_of(factors[0])
    monos = [_monomial(P, h) for h in letters]
    for i, Fi in enumerate(factors):
        for j, hj in enumerate(monos):
            if i != j and not all(in_gamma_prime(chi, hj) for chi in Fi.elements):
                raise FactorConditionFails(f"factor {i} does not fix letter {j}")
    gens = []
    for Fi in factors:
        gens.extend(Fi.elements[k] for k in (Fi.generators or range(1, len(Fi))))
    gens = gens or [factors[0].identity]
    Pi = closure(gens, convolve, char_inverse, cap=max(2, _prod(len(f) for f in factors) + 1))
    if len(Pi) != _prod(len(f) for f in factors):
        raise NotDirect("factors do not form a direct product")
    closed = field_of(Pi).one
    for Fi, h in zip(factors, monos):
        closed = closed * sigma_brute(Fi, h)
    whole = Monomial(tuple(x for h in monos for x in h.letters))
    return _report(Pi, whole, closed, "Pstab3", brute=brute)


def _prod(xs: Iterable[int]) -> int:
    out = 1
    for x in xs:
        out *= x
    return out


# --------------------------------------------------------------- identities

@dataclass
class IdentityReport:
    counts: dict[str, list[int]] = field(default_factory=dict)

    def record(self, name: str, ok: bool):
        c = self.counts.setdefault(name, [0, 0])
        c[0 if ok else 1] += 1

    @property
    def ok(self) -> bool:
        return all(f == 0 for _, f in self.counts.values())

    def merge(self, other: "IdentityReport"):
        for k, (a, b) in other.counts.items():
            c = self.counts.setdefault(k, [0, 0])
            c[0] += a
            c[1] += b


def verify_convolution_identities(Pi: FiniteGroup, m) -> IdentityReport:
    """Absorption and the linear identities tying Sigma(h) to Sigma(g), Sigma(g')."""
    P = presentation_of(Pi)
    F = field_of(Pi)
    mono = _monomial(P, m)
    rep = IdentityReport()
    total = sigma_brute(Pi, mono)
    for lam in Pi.elements:
        left = sum((delta_power_eval([lam, nu], mono) for nu in Pi.elements), F.zero)
        right = sum((delta_power_eval([nu, lam], mono) for nu in Pi.elements), F.zero)
        rep.record("E0.left", left == total)
        rep.record("E0.right", right == total)

    kinds = {P.kind(nm) for nm, _ in mono.letters}
    if kinds != {SKEW}:
        return rep
    skews = [P.skew(nm) for nm, _ in mono.letters]
    g, gp = combined_words(P, skews)
    if len(skews) == 1:
        s = skews[0]
        sig_g = sigma_brute(Pi, Monomial.from_word(s.g))
        sig_gp = sigma_brute(Pi, Monomial.from_word(s.gp))
        ggp = word_mul(s.g, s.gp, dict(P.grouplikes))
        n = F(len(Pi))
        for k, lam in enumerate(Pi.elements):
            lh = lam[s.name]
            lhs4 = (lam.word_value(s.g) - lam.word_value(s.gp)) * total
            rep.record("E4", lhs4 == lh * (sig_g - sig_gp))
            cyc = Pi.generated([k])
            c = F(len(cyc))
            sig_cyc = sum((Pi.elements[i].word_value(ggp) for i in cyc), F.zero)
            lhs3 = (1 - lam.word_value(ggp)) * n * c * total
            rhs3 = (c - sig_cyc) * lh * (sig_g - sig_gp) ** 2
            rep.record("E3", lhs3 == rhs3)
    for lam in Pi.elements:
        lg, lgp = lam.word_value(g), lam.word_value(gp)
        left = F.zero
        right = F.zero
        for nu in Pi.elements:
            a = F.one
            b = F.one
            for s in skews:
                a = a * (lam.word_value(s.g) * nu[s.name] + lam[s.name] * nu.word_value(s.gp))
                b = b * (nu.word_value(s.g) * lam[s.name] + nu[s.name] * lam.word_value(s.gp))
            left = left + a
            right = right + b
        rep.record("recursion.left", total * (1 - lg) == left - lg * total)
        rep.record("recursion.right", total * (1 - lgp) == right - total * lgp)
    return rep
