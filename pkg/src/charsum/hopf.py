"""Hopf algebra presentations and their characters.

A presentation lists

* grouplike generators ``K`` with an order (0 meaning infinite), so that
  ``Delta K = K (x) K``;
* skew-primitive generators ``h`` with a pair of grouplike words ``(g, g')``
  and ``Delta h = g (x) h + h (x) g'``;
* annihilated generators, which every character sends to zero;
* optional constraints on character values.

A character is an algebra map ``H -> F``, recorded by its values on the
generators. Characters form a group under convolution, and finite subgroups
of that group are the objects whose sums the rest of the package studies.
"""

from __future__ import annotations

import functools
import os
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import (
    ConstraintViolated,
    InvalidMonomial,
    InvalidPresentation,
    MissingValue,
    MixedPresentations,
    UnknownGenerator,
    ZeroGrouplikeValue,
)
from .group import FiniteGroup, closure
from .ring import Field, FieldElement

Word = tuple[tuple[str, int], ...]

GROUPLIKE, SKEW, ANNIHILATED = "grouplike", "skew", "annihilated"

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")


# ------------------------------------------------------------------ monomials

@dataclass(frozen=True)
class Monomial:
    """Ordered product of letters ``(name, exponent)``."""

    letters: tuple[tuple[str, int], ...] = ()

    @classmethod
    def of(cls, *names: str) -> "Monomial":
        return cls(tuple((n, 1) for n in names))

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        """Parse ``"h1*h2*K^-2"``; ``"1"`` or ``""`` is the empty monomial."""
        text = text.strip()
        if text in ("", "1"):
            return cls()
        letters = []
        for part in text.split("*"):
            part = part.strip()
            name, _, exp = part.partition("^")
            name = name.strip()
            if not _NAME.match(name):
                raise InvalidMonomial(f"bad letter {part!r}")
            try:
                e = int(exp.strip().strip("()")) if exp else 1
            except ValueError:
                raise InvalidMonomial(f"bad exponent in {part!r}") from None
            letters.append((name, e))
        return cls(tuple(letters))

    @classmethod
    def from_word(cls, word: Word) -> "Monomial":
        return cls(tuple(word))

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def names(self) -> list[str]:
        return [n for n, _ in self.letters]

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return "*".join(n if e == 1 else f"{n}^{e}" for n, e in self.letters)


# --------------------------------------------------------------- constraints

@dataclass(frozen=True)
class Constraint:
    """A condition on character values.

    Kinds: ``unit`` (value is a unit), ``self_inverse`` (value squared is 1),
    ``root_of_unity`` (value^l = 1), ``zero`` (value is 0) and
    ``word_is_one`` (a grouplike word evaluates to 1; ``generator`` unused).
    """

    kind: str
    generator: str = ""
    l: int = 0
    word: Word = ()

    def describe(self) -> str:
        if self.kind == "root_of_unity":
            return f"{self.generator}^{self.l} = 1"
        if self.kind == "word_is_one":
            return f"{Monomial.from_word(self.word)} = 1"
        return f"{self.kind}({self.generator})"


def UnitValue(g: str) -> Constraint:
    return Constraint("unit", g)


def SelfInverse(g: str) -> Constraint:
    return Constraint("self_inverse", g)


def RootOfUnityDividing(g: str, l: int) -> Constraint:
    return Constraint("root_of_unity", g, l=l)


def FixedZero(g: str) -> Constraint:
    return Constraint("zero", g)


def WordIsOne(word: Word) -> Constraint:
    return Constraint("word_is_one", word=tuple(word))


# -------------------------------------------------------------- presentations

@dataclass(frozen=True)
class SkewPrimitive:
    name: str
    g: Word
    gp: Word


@dataclass(frozen=True)
class HopfPresentation:
    grouplikes: tuple[tuple[str, int], ...] = ()
    skewprims: tuple[SkewPrimitive, ...] = ()
    annihilated: tuple[str, ...] = ()
    constraints: tuple[Constraint, ...] = ()
    name: str = ""
    _kinds: dict = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        kinds: dict[str, str] = {}
        for nm, order in self.grouplikes:
            self._declare(kinds, nm, GROUPLIKE)
            if order < 0:
                raise InvalidPresentation(f"negative order for {nm}")
        for s in self.skewprims:
            self._declare(kinds, s.name, SKEW)
        for nm in self.annihilated:
            self._declare(kinds, nm, ANNIHILATED)
        object.__setattr__(self, "_kinds", kinds)
        for s in self.skewprims:
            for w in (s.g, s.gp):
                for nm, _ in w:
                    if kinds.get(nm) != GROUPLIKE:
                        raise InvalidPresentation(
                            f"coproduct of {s.name} uses {nm!r}, which is not grouplike")
        for c in self.constraints:
            if c.kind not in ("unit", "self_inverse", "root_of_unity", "zero", "word_is_one"):
                raise InvalidPresentation(f"unknown constraint kind {c.kind!r}")
            if c.kind == "word_is_one":
                if any(kinds.get(nm) != GROUPLIKE for nm, _ in c.word):
                    raise InvalidPresentation("word constraints need grouplike letters")
            elif c.generator not in kinds:
                raise InvalidPresentation(f"constraint on unknown generator {c.generator!r}")
            if c.kind == "root_of_unity" and c.l < 1:
                raise InvalidPresentation("root_of_unity needs l >= 1")

    @staticmethod
    def _declare(kinds, nm, kind):
        if not _NAME.match(nm):
            raise InvalidPresentation(f"bad generator name {nm!r}")
        if nm in kinds:
            raise InvalidPresentation(f"generator {nm!r} declared twice")
        kinds[nm] = kind

    @classmethod
    def build(cls, grouplikes: Iterable = (), skewprims: Iterable = (),
              annihilated: Iterable[str] = (), constraints: Iterable[Constraint] = (),
              name: str = "") -> "HopfPresentation":
        """Friendly constructor: grouplike words may be dicts, strings or pairs."""
        gl = tuple((str(n), int(o)) for n, o in grouplikes)
        orders = dict(gl)
        sk = []
        for entry in skewprims:
            if isinstance(entry, SkewPrimitive):
                sk.append(entry)
            else:
                nm, g, gp = entry
                sk.append(SkewPrimitive(nm, normalize_word(g, orders), normalize_word(gp, orders)))
        cons = []
        for c in constraints:
            if c.kind == "word_is_one":
                c = Constraint(c.kind, c.generator, c.l, normalize_word(c.word, orders))
            cons.append(c)
        return cls(gl, tuple(sk), tuple(annihilated), tuple(cons), name)

    # -- queries

    @property
    def generator_names(self) -> tuple[str, ...]:
        return (tuple(n for n, _ in self.grouplikes)
                + tuple(s.name for s in self.skewprims) + tuple(self.annihilated))

    def kind(self, name: str) -> str:
        try:
            return self._kinds[name]
        except KeyError:
            raise UnknownGenerator(name) from None

    def order(self, name: str) -> int:
        for n, o in self.grouplikes:
            if n == name:
                return o
        raise UnknownGenerator(name)

    def skew(self, name: str) -> SkewPrimitive:
        for s in self.skewprims:
            if s.name == name:
                return s
        raise UnknownGenerator(name)

    def word(self, spec) -> Word:
        return normalize_word(spec, dict(self.grouplikes))

    def monomial(self, spec) -> Monomial:
        """Validated monomial; positive powers of non-grouplike letters are expanded."""
        m = spec if isinstance(spec, Monomial) else (
            Monomial.parse(spec) if isinstance(spec, str) else Monomial(tuple(spec)))
        out = []
        for nm, e in m.letters:
            k = self.kind(nm)
            if k == GROUPLIKE:
                if e:
                    out.append((nm, e))
            else:
                if e < 1:
                    raise InvalidMonomial(f"{nm} is not grouplike; exponent must be positive")
                out.extend([(nm, 1)] * e)
        return Monomial(tuple(out))

    def is_grouplike_monomial(self, m: Monomial) -> bool:
        return all(self.kind(n) == GROUPLIKE for n, _ in m.letters)

    def skew_letters(self, m: Monomial) -> list[SkewPrimitive]:
        return [self.skew(n) for n, _ in m.letters if self.kind(n) == SKEW]

    def grouplike_part(self, m: Monomial) -> Word:
        return self.word([(n, e) for n, e in m.letters if self.kind(n) == GROUPLIKE])


def normalize_word(spec, orders: Mapping[str, int]) -> Word:
    """Canonical grouplike word: exponents combined, reduced by order, sorted."""
    if spec is None:
        pairs = []
    elif isinstance(spec, str):
        pairs = Monomial.parse(spec).letters
    elif isinstance(spec, Monomial):
        pairs = spec.letters
    elif isinstance(spec, Mapping):
        pairs = list(spec.items())
    else:
        pairs = [(p, 1) if isinstance(p, str) else tuple(p) for p in spec]
    exps: dict[str, int] = {}
    for nm, e in pairs:
        if nm not in orders:
            raise UnknownGenerator(f"{nm!r} is not a grouplike generator")
        exps[nm] = exps.get(nm, 0) + int(e)
    rank = {nm: i for i, nm in enumerate(orders)}
    out = []
    for nm in sorted(exps, key=rank.__getitem__):
        e = exps[nm]
        if orders[nm] > 0:
            e %= orders[nm]
        if e:
            out.append((nm, e))
    return tuple(out)


def word_mul(a: Word, b: Word, orders: Mapping[str, int]) -> Word:
    return normalize_word(list(a) + list(b), orders)


def word_inverse(a: Word, orders: Mapping[str, int]) -> Word:
    return normalize_word([(n, -e) for n, e in a], orders)


# ---------------------------------------------------------------- characters

class Character:
    """Algebra map H -> F, stored as values on the generators."""

    __slots__ = ("presentation", "field", "values", "_hash")

    def __init__(self, presentation: HopfPresentation, fld: Field, values: tuple):
        self.presentation = presentation
        self.field = fld
        self.values = values
        self._hash = hash(tuple(v.rep for v in values))

    def __getitem__(self, name: str) -> FieldElement:
        try:
            return self.values[_position(self.presentation)[name]]
        except KeyError:
            raise UnknownGenerator(name) from None

    def as_dict(self) -> dict[str, FieldElement]:
        return dict(zip(self.presentation.generator_names, self.values))

    def word_value(self, word: Word) -> FieldElement:
        pos = _position(self.presentation)
        out = self.field.one
        for nm, e in word:
            out = out * self.values[pos[nm]] ** e
        return out

    def __call__(self, m) -> FieldElement:
        return char_eval(self, m)

    def __mul__(self, other: "Character") -> "Character":
        return convolve(self, other)

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return self.values == other.values and self.presentation == other.presentation

    def __hash__(self):
        return self._hash

    def __repr__(self):
        inner = ", ".join(f"{n}: {v}" for n, v in self.as_dict().items())
        return "{" + inner + "}"


@functools.lru_cache(maxsize=None)
def _position(P: HopfPresentation) -> dict[str, int]:
    return {n: i for i, n in enumerate(P.generator_names)}


@functools.lru_cache(maxsize=None)
def _convolution_plan(P: HopfPresentation):
    """Per generator: ('g', i) or ('s', i, g-word positions, g'-word positions) or ('a',)."""
    pos = _position(P)
    plan = []
    for nm in P.generator_names:
        k = P.kind(nm)
        if k == GROUPLIKE:
            plan.append(("g", pos[nm]))
        elif k == SKEW:
            s = P.skew(nm)
            plan.append(("s", pos[nm], tuple((pos[a], e) for a, e in s.g),
                         tuple((pos[a], e) for a, e in s.gp)))
        else:
            plan.append(("a",))
    return tuple(plan)


def _word_val(values, word_pos, one):
    out = one
    for i, e in word_pos:
        out = out * (values[i] if e == 1 else values[i] ** e)
    return out


def validate_character(P: HopfPresentation, fld: Field, values: Mapping) -> Character:
    """Check generator values against the presentation and build the character."""
    extra = set(values) - set(P.generator_names)
    if extra:
        raise UnknownGenerator(", ".join(sorted(extra)))
    vals = []
    for nm in P.generator_names:
        kind = P.kind(nm)
        if nm in values:
            v = fld(values[nm])
        elif kind == ANNIHILATED:
            v = fld.zero
        else:
            raise MissingValue(f"no value for generator {nm!r}")
        if kind == GROUPLIKE:
            if v.is_zero():
                raise ZeroGrouplikeValue(f"grouplike {nm} sent to 0")
            order = P.order(nm)
            if order and v ** order != 1:
                raise ConstraintViolated("order", f"{nm}^{order} != 1")
        elif kind == ANNIHILATED and not v.is_zero():
            raise ConstraintViolated("annihilated", f"{nm} must be sent to 0")
        vals.append(v)
    chi = Character(P, fld, tuple(vals))
    for c in P.constraints:
        if not _constraint_holds(chi, c):
            raise ConstraintViolated(c.kind, c.describe())
    return chi


def _constraint_holds(chi: Character, c: Constraint) -> bool:
    if c.kind == "word_is_one":
        return chi.word_value(c.word) == 1
    v = chi[c.generator]
    if c.kind == "unit":
        return not v.is_zero()
    if c.kind == "self_inverse":
        return v * v == 1
    if c.kind == "root_of_unity":
        return v ** c.l == 1
    return v.is_zero()


def satisfies_constraints(chi: Character) -> bool:
    try:
        validate_character(chi.presentation, chi.field, chi.as_dict())
    except (ConstraintViolated, ZeroGrouplikeValue):
        return False
    return True


def counit(P: HopfPresentation, fld: Field) -> Character:
    vals = tuple(fld.one if P.kind(n) == GROUPLIKE else fld.zero for n in P.generator_names)
    return Character(P, fld, vals)


def _check_pair(chi: Character, nu: Character):
    if chi.presentation != nu.presentation:
        raise MixedPresentations("characters of different presentations")
    if chi.field is not nu.field:
        raise MixedPresentations("characters over different fields")


def convolve(chi: Character, nu: Character) -> Character:
    """(chi * nu)(x) = (chi (x) nu)(Delta x) on generators."""
    _check_pair(chi, nu)
    a, b = chi.values, nu.values
    one, zero = chi.field.one, chi.field.zero
    out = []
    for step in _convolution_plan(chi.presentation):
        tag = step[0]
        if tag == "g":
            i = step[1]
            out.append(a[i] * b[i])
        elif tag == "s":
            _, i, gw, gpw = step
            out.append(_word_val(a, gw, one) * b[i] + a[i] * _word_val(b, gpw, one))
        else:
            out.append(zero)
    return Character(chi.presentation, chi.field, tuple(out))


def char_inverse(chi: Character) -> Character:
    """chi o S: grouplikes inverted, h -> -chi(g)^-1 chi(h) chi(g')^-1."""
    a = chi.values
    one, zero = chi.field.one, chi.field.zero
    out = []
    for step in _convolution_plan(chi.presentation):
        tag = step[0]
        if tag == "g":
            out.append(a[step[1]].inverse())
        elif tag == "s":
            _, i, gw, gpw = step
            out.append(-a[i] / (_word_val(a, gw, one) * _word_val(a, gpw, one)))
        else:
            out.append(zero)
    return Character(chi.presentation, chi.field, tuple(out))


@functools.lru_cache(maxsize=4096)
def _eval_plan(P: HopfPresentation, m: Monomial):
    pos = _position(P)
    plan = []
    for nm, e in m.letters:
        kind = P.kind(nm)
        if kind == ANNIHILATED:
            return None
        if kind != GROUPLIKE and e != 1:
            raise InvalidMonomial(f"{nm} is not grouplike; exponent must be 1")
        plan.append((pos[nm], e))
    return tuple(plan)


def _as_monomial(P: HopfPresentation, m) -> Monomial:
    if isinstance(m, Monomial):
        return m
    if isinstance(m, str):
        return P.monomial(m)
    return Monomial(tuple(m))


def char_eval(chi: Character, m) -> FieldElement:
    """Value of the character on a monomial (multiplicative in the letters)."""
    plan = _eval_plan(chi.presentation, _as_monomial(chi.presentation, m))
    if plan is None:
        return chi.field.zero
    vals = chi.values
    out = chi.field.one
    for i, e in plan:
        out = out * (vals[i] if e == 1 else vals[i] ** e)
    return out


def _letter_expansion(P: HopfPresentation, nm: str, e: int, n: int):
    """Delta^(n-1) of one letter as a list of pure tensors (tuples of letter lists)."""
    kind = P.kind(nm)
    if kind == GROUPLIKE:
        return [tuple(((nm, e),) for _ in range(n))]
    s = P.skew(nm)
    terms = []
    for i in range(n):
        terms.append(tuple(s.g if j < i else ((nm, 1),) if j == i else s.gp
                           for j in range(n)))
    return terms


def delta_power_eval(chars: Sequence[Character], m) -> FieldElement:
    """(chi_1 (x) ... (x) chi_n)(Delta^(n-1) m), expanding the coproduct directly.

    Each letter expands as sum_i g^(x)i (x) h (x) g'^(x)(n-1-i); the expansions
    are multiplied in the tensor algebra slot by slot and then evaluated.
    This does not go through :func:`convolve` and so can serve as its check.
    """
    if not chars:
        raise ValueError("need at least one character")
    for c in chars[1:]:
        _check_pair(chars[0], c)
    P, fld = chars[0].presentation, chars[0].field
    mono = _as_monomial(P, m)
    n = len(chars)
    if any(P.kind(nm) == ANNIHILATED for nm, _ in mono.letters):
        return fld.zero
    tensors: dict[tuple, int] = {tuple(() for _ in range(n)): 1}
    for nm, e in mono.letters:
        expansion = _letter_expansion(P, nm, e, n)
        nxt: dict[tuple, int] = {}
        for t, c in tensors.items():
            for term in expansion:
                key = tuple(a + tuple(b) for a, b in zip(t, term))
                nxt[key] = nxt.get(key, 0) + c
        tensors = nxt
    total = fld.zero
    for t, c in tensors.items():
        val = fld(c)
        for chi, slot in zip(chars, t):
            val = val * char_eval(chi, Monomial(slot))
        total = total + val
    return total


def default_cap() -> int:
    """Closure cap: ``CHARSUM_MAX_GROUP`` from the environment, else 1024."""
    raw = os.environ.get("CHARSUM_MAX_GROUP", "")
    try:
        return int(raw) if raw else 1024
    except ValueError:
        return 1024


def character_group(generators: Sequence[Character], cap: int | None = None) -> FiniteGroup:
    """Finite group of characters generated under convolution."""
    return closure(list(generators), convolve, char_inverse,
                   default_cap() if cap is None else cap)


def presentation_of(Pi: FiniteGroup) -> HopfPresentation:
    return Pi.elements[0].presentation


def field_of(Pi: FiniteGroup) -> Field:
    return Pi.elements[0].field
