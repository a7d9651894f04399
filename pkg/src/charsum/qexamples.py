"""Ready-made presentations: group algebras, small quantum groups and relatives.

In every builder here the non-grouplike generators are weight vectors that
all characters kill, so the character group lives on the grouplikes and a
sum over a finite Pi is |Pi| times the grouplike part supported on G_Pi.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import ConstraintViolated, InvalidPresentation, ZeroGrouplikeValue
from .group import FiniteGroup
from .hopf import (
    GROUPLIKE,
    Character,
    HopfPresentation,
    Monomial,
    RootOfUnityDividing,
    SelfInverse,
    UnitValue,
    WordIsOne,
    char_eval,
    field_of,
    presentation_of,
    validate_character,
)
from .ring import Field, FieldElement, roots_of_unity
from .sums import SigmaReport, word_in_G_Pi


def build_group_ring(n: int, l: int) -> HopfPresentation:
    """R[Z/l]^n (l = 0 for Z): grouplikes K_1..K_n."""
    cons = [RootOfUnityDividing(f"K{i}", l) for i in range(1, n + 1)] if l else []
    return HopfPresentation.build([(f"K{i}", l) for i in range(1, n + 1)], (), (), cons,
                                  name=f"group_ring({n},{l})")


def build_uql(n: int, l: int) -> HopfPresentation:
    """Small quantum group of rank n at an l-th root of unity.

    Characters kill every E_i and F_i; the relation K_i E_j K_i^-1 = q^a E_j
    together with [E_i, F_i] proportional to K_i - K_i^-1 forces chi(K_i)^2 = 1.
    """
    K = [(f"K{i}", l) for i in range(1, n + 1)]
    ann = [f"E{i}" for i in range(1, n + 1)] + [f"F{i}" for i in range(1, n + 1)]
    cons = [SelfInverse(f"K{i}") for i in range(1, n + 1)]
    return HopfPresentation.build(K, (), ann, cons, name=f"u_q({n},{l})")


def build_borel(n: int, l: int) -> HopfPresentation:
    """Borel part: K_i of order l, E_i killed, no self-inverse condition."""
    K = [(f"K{i}", l) for i in range(1, n + 1)]
    ann = [f"E{i}" for i in range(1, n + 1)]
    cons = [RootOfUnityDividing(f"K{i}", l) for i in range(1, n + 1)] if l else []
    return HopfPresentation.build(K, (), ann, cons, name=f"borel({n},{l})")


def build_affine_space(n: int, l: int) -> HopfPresentation:
    """Quantum affine space: grouplikes K_i with K_i^l = 1, killed coordinates X_i."""
    K = [(f"K{i}", l) for i in range(1, n + 1)]
    ann = [f"X{i}" for i in range(1, n + 1)]
    cons = [RootOfUnityDividing(f"K{i}", l) for i in range(1, n + 1)] if l else []
    return HopfPresentation.build(K, (), ann, cons, name=f"affine({n},{l})")


def build_virasoro(modes=range(-2, 3)) -> HopfPresentation:
    """Grouplike T of infinite order; central charge c and modes e_m are killed."""
    ann = ["c"] + [f"e{m}" if m >= 0 else f"e_m{-m}" for m in modes]
    return HopfPresentation.build([("T", 0)], (), ann, (), name="virasoro")


def _diag(i: int) -> str:
    return f"u{i}{i}"


def build_quantum_gl(n: int) -> HopfPresentation:
    """O_q(GL_n): diagonal generators are grouplike for characters, the rest killed."""
    if not 1 <= n <= 9:
        raise InvalidPresentation("1 <= n <= 9")
    diag = [(_diag(i), 0) for i in range(1, n + 1)]
    off = [f"u{i}{j}" for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    cons = [UnitValue(_diag(i)) for i in range(1, n + 1)]
    return HopfPresentation.build(diag, (), off, cons, name=f"O_q(GL_{n})")


def build_quantum_sl(n: int) -> HopfPresentation:
    """O_q(SL_n): as GL_n with the product of the diagonal values equal to 1."""
    P = build_quantum_gl(n)
    det = tuple((_diag(i), 1) for i in range(1, n + 1))
    return HopfPresentation(P.grouplikes, P.skewprims, P.annihilated,
                            P.constraints + (WordIsOne(det),), name=f"O_q(SL_{n})")


BUILDERS = {
    "group_ring": lambda rank=1, l=0: build_group_ring(rank, l),
    "uql": lambda rank=1, l=2: build_uql(rank, l),
    "borel": lambda rank=1, l=2: build_borel(rank, l),
    "affine_space": lambda rank=1, l=2: build_affine_space(rank, l),
    "virasoro": lambda modes=(-2, -1, 0, 1, 2): build_virasoro(modes),
    "quantum_gl": lambda rank=2: build_quantum_gl(rank),
    "quantum_sl": lambda rank=2: build_quantum_sl(rank),
}


def enumerate_weights(P: HopfPresentation, fld: Field, bound: int) -> list[Character]:
    """All characters whose grouplike values are bound-th roots of unity.

    Exhaustive over the roots of unity of ``fld``; non-grouplike generators
    are all killed in these examples.
    """
    if P.skewprims:
        raise InvalidPresentation("enumeration covers grouplike-only presentations")
    cands = roots_of_unity(fld, bound)
    names = [n for n, _ in P.grouplikes]
    out = []
    for vals in itertools.product(cands, repeat=len(names)):
        try:
            out.append(validate_character(P, fld, dict(zip(names, vals))))
        except (ConstraintViolated, ZeroGrouplikeValue):
            continue
    return out


@dataclass
class GradedElement:
    """Finite sum of coefficient * monomial."""

    terms: list[tuple[FieldElement, Monomial]]


def sigma_graded(Pi: FiniteGroup, x: GradedElement, brute: bool = True) -> SigmaReport:
    """|Pi| times the coefficients of grouplike terms lying in G_Pi.

    Terms containing a killed generator contribute zero; brute force
    evaluates every term on every member of Pi.
    """
    P = presentation_of(Pi)
    F = field_of(Pi)
    closed = F.zero
    for coeff, mono in x.terms:
        mono = P.monomial(mono)
        if all(P.kind(nm) == GROUPLIKE for nm, _ in mono.letters):
            if word_in_G_Pi(Pi, P.word(mono)):
                closed = closed + coeff * len(Pi)
    b = None
    if brute:
        b = F.zero
        for chi in Pi.elements:
            for coeff, mono in x.terms:
                b = b + coeff * char_eval(chi, P.monomial(mono))
    return SigmaReport(b, closed, "graded", order=len(Pi))


def sigma_virasoro(Pi: FiniteGroup, m) -> SigmaReport:
    """T^k sums to |Pi| when |Pi| divides k, to 0 otherwise; killed letters give 0."""
    P = presentation_of(Pi)
    mono = P.monomial(m)
    F = field_of(Pi)
    k = sum(e for nm, e in mono.letters if nm == "T")
    killed = any(P.kind(nm) != GROUPLIKE for nm, _ in mono.letters)
    closed = F.zero if killed or k % len(Pi) else F(len(Pi))
    b = F.zero
    for chi in Pi.elements:
        b = b + char_eval(chi, mono)
    return SigmaReport(b, closed, "virasoro", order=len(Pi))
