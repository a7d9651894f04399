"""Exact coefficient fields.

Four kinds of field are supported, all with exact arithmetic:

* ``Q``: the rationals, backed by :class:`fractions.Fraction`;
* ``Q(zeta_m)``: cyclotomic fields, elements reduced modulo the m-th
  cyclotomic polynomial and stored as integer numerators over a common
  denominator;
* ``F_p``: prime fields;
* ``F_p[x]/(f)``: finite extensions given by a monic irreducible modulus.

Fields are interned: building the same :class:`FieldSpec` twice returns the
same :class:`Field` object, so elements of equal fields interoperate.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DivisionByZero,
    InvalidSpec,
    MixedFields,
    NoSuchRoot,
    NotPrime,
    ReducibleModulus,
)


# ---------------------------------------------------------------- integers

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    r = math.isqrt(n)
    return all(n % d for d in range(3, r + 1, 2))


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in increasing order."""
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _intpoly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (low-to-high), ``den`` monic."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@functools.cache
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients (low-to-high) of the m-th cyclotomic polynomial."""
    if m < 1:
        raise InvalidSpec(f"cyclotomic index must be positive, got {m}")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in divisors(m)[:-1]:
        poly = _intpoly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


# ------------------------------------------------------------- field specs

@dataclass(frozen=True)
class FieldSpec:
    kind: str
    m: int = 0
    p: int = 0
    modulus: tuple[int, ...] = ()

    @classmethod
    def rational(cls) -> "FieldSpec":
        return cls("rational")

    @classmethod
    def cyclotomic(cls, m: int) -> "FieldSpec":
        return cls("cyclotomic", m=m)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls("prime", p=p)

    @classmethod
    def prime_ext(cls, p: int, modulus) -> "FieldSpec":
        """``modulus`` lists coefficients low-to-high and must be monic."""
        return cls("prime_ext", p=p, modulus=tuple(int(c) for c in modulus))

    def __str__(self) -> str:
        if self.kind == "rational":
            return "Q"
        if self.kind == "cyclotomic":
            return f"Q(zeta_{self.m})"
        if self.kind == "prime":
            return f"F_{self.p}"
        terms = []
        for i, c in reversed(list(enumerate(self.modulus))):
            if c:
                mono = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
                terms.append(mono if c == 1 and i else f"{c}*{mono}" if i else str(c))
        return f"F_{self.p}[x]/({' + '.join(terms)})"


def field_make(spec: FieldSpec) -> "Field":
    """Validate ``spec`` and return the (interned) field it describes."""
    return _field_make(spec)


@functools.cache
def _field_make(spec: FieldSpec) -> "Field":
    if spec.kind == "rational":
        return RationalField(spec)
    if spec.kind == "cyclotomic":
        if spec.m < 1:
            raise InvalidSpec(f"cyclotomic index must be positive, got {spec.m}")
        return CyclotomicField(spec)
    if spec.kind == "prime":
        if not is_prime(spec.p):
            raise NotPrime(f"{spec.p} is not prime")
        return PrimeField(spec)
    if spec.kind == "prime_ext":
        if not is_prime(spec.p):
            raise NotPrime(f"{spec.p} is not prime")
        mod = [c % spec.p for c in spec.modulus]
        if len(mod) < 2 or mod[-1] != 1:
            raise InvalidSpec("modulus must be monic of degree at least 1")
        if len(mod) - 1 > 8:
            raise InvalidSpec("extension degree is limited to 8")
        if not _irreducible_mod_p(tuple(mod), spec.p):
            raise ReducibleModulus(f"{spec} has a proper factor")
        return ExtensionField(FieldSpec.prime_ext(spec.p, mod))
    raise InvalidSpec(f"unknown field kind {spec.kind!r}")


def rational() -> "Field":
    return field_make(FieldSpec.rational())


def cyclotomic(m: int) -> "Field":
    return field_make(FieldSpec.cyclotomic(m))


def prime_field(p: int) -> "Field":
    return field_make(FieldSpec.prime(p))


def extension_field(p: int, modulus) -> "Field":
    return field_make(FieldSpec.prime_ext(p, modulus))


# ------------------------------------------------------- polynomials mod p

def default_modulus(p: int, k: int) -> tuple[int, ...]:
    """First monic irreducible of degree k over F_p, coefficients low-to-high."""
    for low in itertools.product(range(p), repeat=k):
        f = tuple(reversed(low)) + (1,)
        if f[0] and _irreducible_mod_p(f, p):
            return f
    raise InvalidSpec(f"no irreducible of degree {k} over F_{p}")


def _polymod_p(a: list[int], f: tuple[int, ...], p: int) -> list[int]:
    a = [c % p for c in a]
    d = len(f) - 1
    for k in range(len(a) - 1, d - 1, -1):
        c = a[k]
        if c:
            for i in range(d + 1):
                a[k - d + i] = (a[k - d + i] - c * f[i]) % p
    return a[:d] if len(a) >= d else a + [0] * (d - len(a))


def _irreducible_mod_p(f: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(f)/2."""
    d = len(f) - 1
    for k in range(1, d // 2 + 1):
        for low in itertools.product(range(p), repeat=k):
            if not any(_polymod_p(list(f), low + (1,), p)):
                return False
    return True


# ------------------------------------------------------------------ fields

class Field:
    """Common interface; concrete fields implement the ``_op`` methods on reps."""

    characteristic: int
    degree: int

    def __init__(self, spec: FieldSpec):
        self.spec = spec

    def __repr__(self) -> str:
        return str(self.spec)

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field is not self:
                raise MixedFields(f"{value.field} element used in {self}")
            return value
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return FieldElement(self, self._from_int(value))
        if isinstance(value, Fraction):
            return self(value.numerator) / self(value.denominator)
        raise TypeError(f"cannot convert {value!r} into {self}")

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, self._from_int(0))

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, self._from_int(1))

    @property
    def gen(self) -> "FieldElement":
        """zeta_m for cyclotomic fields, the class of x for extensions, else 1."""
        return self.one

    def from_coeffs(self, coeffs) -> "FieldElement":
        """Element sum(c_i * gen^i); coefficients may be ints or Fractions."""
        out = self.zero
        power = self.one
        g = self.gen
        for c in coeffs:
            if c:
                out = out + power * self(c)
            power = power * g
        return out

    def is_finite(self) -> bool:
        return self.characteristic > 0

    def size(self) -> int:
        if not self.is_finite():
            raise InvalidSpec(f"{self} is infinite")
        return self.characteristic ** self.degree

    def elements(self) -> list["FieldElement"]:
        raise InvalidSpec(f"{self} is infinite")

    def unit_group_order(self) -> int:
        """Order of the group of roots of unity in this field."""
        raise NotImplementedError

    def coefficients(self, x: "FieldElement") -> list[Fraction]:
        """Coordinates of ``x`` in the power basis of ``gen``."""
        raise NotImplementedError

    def format(self, rep) -> str:
        raise NotImplementedError


class RationalField(Field):
    characteristic = 0
    degree = 1

    def _from_int(self, n):
        return Fraction(n)

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _inv(self, a):
        return 1 / a

    def _is_zero(self, a):
        return a == 0

    def unit_group_order(self):
        return 2

    def coefficients(self, x):
        return [x.rep]

    def format(self, rep):
        return str(rep)


class CyclotomicField(Field):
    """Q(zeta_m); reps are ``(numerators, denominator)`` in the power basis."""

    characteristic = 0

    def __init__(self, spec):
        super().__init__(spec)
        self.m = spec.m
        self.phi = cyclotomic_polynomial(self.m)
        self.degree = d = len(self.phi) - 1
        # reduction rows: x^k for d <= k <= 2d-2 in the power basis
        rows = {}
        cur = [-c for c in self.phi[:d]]
        for k in range(d, max(2 * d - 1, d + 1)):
            rows[k] = tuple(cur)
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [c - top * f for c, f in zip(cur, self.phi[:d])]
        self._red = rows
        self._zero = ((0,) * d, 1)

    def _norm(self, nums, den):
        if den < 0:
            nums = [-c for c in nums]
            den = -den
        g = den
        for c in nums:
            if c:
                g = math.gcd(g, c)
                if g == 1:
                    break
        if g != 1:
            nums = [c // g for c in nums]
            den //= g
        if not any(nums):
            return self._zero
        return tuple(nums), den

    def _from_int(self, n):
        return self._norm([n] + [0] * (self.degree - 1), 1)

    @property
    def gen(self):
        if self.degree == 1:
            # Q(zeta_1) = Q(zeta_2) = Q; zeta is 1 or -1
            return FieldElement(self, self._from_int(1 if self.m == 1 else -1))
        nums = [0] * self.degree
        nums[1] = 1
        return FieldElement(self, (tuple(nums), 1))

    def _add(self, a, b):
        an, ad = a
        bn, bd = b
        if ad == bd:
            return self._norm([x + y for x, y in zip(an, bn)], ad)
        return self._norm([x * bd + y * ad for x, y in zip(an, bn)], ad * bd)

    def _neg(self, a):
        return tuple(-c for c in a[0]), a[1]

    def _mul(self, a, b):
        an, ad = a
        bn, bd = b
        d = self.degree
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(an):
            if x:
                for j, y in enumerate(bn):
                    if y:
                        prod[i + j] += x * y
        out = prod[:d]
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                for i, r in enumerate(self._red[k]):
                    if r:
                        out[i] += c * r
        return self._norm(out, ad * bd)

    def _is_zero(self, a):
        return not any(a[0])

    def _inv(self, a):
        nums, den = a
        s = _qpoly_inverse([Fraction(c) for c in nums], [Fraction(c) for c in self.phi])
        s = s + [Fraction(0)] * (self.degree - len(s))
        common = 1
        for c in s:
            common = common * c.denominator // math.gcd(common, c.denominator)
        return self._norm([int(c * common) * den for c in s], common)

    def unit_group_order(self):
        return self.m if self.m % 2 == 0 else 2 * self.m

    def coefficients(self, x):
        nums, den = x.rep
        return [Fraction(c, den) for c in nums]

    def format(self, rep):
        nums, den = rep
        terms = []
        for i, c in enumerate(nums):
            if not c:
                continue
            mono = "" if i == 0 else ("zeta" if i == 1 else f"zeta^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        if den != 1:
            body = f"({body})/{den}" if len(terms) > 1 else f"{body}/{den}"
        return body


def _qpoly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _qpoly_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] / lead
        q[k] = c
        if c:
            for i, x in enumerate(b):
                a[k + i] -= c * x
    return _qpoly_trim(q), _qpoly_trim(a[: len(b) - 1])


def _qpoly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _qpoly_sub(a, b):
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return _qpoly_trim([x - y for x, y in zip(a, b)])


def _qpoly_inverse(a, f):
    """Inverse of ``a`` modulo ``f`` over Q by the extended Euclidean algorithm."""
    r0, r1 = _qpoly_trim(list(f)), _qpoly_trim(list(a))
    s0, s1 = [], [Fraction(1)]
    if not r1:
        raise DivisionByZero("inverse of zero")
    while len(r1) > 1:
        q, r = _qpoly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _qpoly_sub(s0, _qpoly_mul(q, s1))
        if not r1:
            raise DivisionByZero("element is not invertible")
    c = r1[0]
    return [x / c for x in s1]


class PrimeField(Field):
    degree = 1

    def __init__(self, spec):
        super().__init__(spec)
        self.characteristic = self.p = spec.p

    def _from_int(self, n):
        return n % self.p

    def _add(self, a, b):
        return (a + b) % self.p

    def _neg(self, a):
        return -a % self.p

    def _mul(self, a, b):
        return a * b % self.p

    def _inv(self, a):
        return pow(a, -1, self.p)

    def _is_zero(self, a):
        return a == 0

    def elements(self):
        return [FieldElement(self, i) for i in range(self.p)]

    def unit_group_order(self):
        return self.p - 1

    def coefficients(self, x):
        return [Fraction(x.rep)]

    def format(self, rep):
        return str(rep)


class ExtensionField(Field):
    """F_p[x]/(f); reps are coefficient tuples of length deg(f)."""

    def __init__(self, spec):
        super().__init__(spec)
        self.characteristic = self.p = spec.p
        self.modulus = spec.modulus
        self.degree = len(spec.modulus) - 1

    def _from_int(self, n):
        return (n % self.p,) + (0,) * (self.degree - 1)

    @property
    def gen(self):
        if self.degree == 1:
            return FieldElement(self, (-self.modulus[0] % self.p,))
        rep = [0] * self.degree
        rep[1] = 1
        return FieldElement(self, tuple(rep))

    def _add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _neg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def _mul(self, a, b):
        d = self.degree
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return tuple(_polymod_p(prod, self.modulus, self.p))

    def _inv(self, a):
        # a^(q-2) in the multiplicative group of order q-1
        x = FieldElement(self, a) ** (self.size() - 2)
        return x.rep

    def _is_zero(self, a):
        return not any(a)

    def elements(self):
        return [FieldElement(self, tuple(c))
                for c in (reversed(t) for t in itertools.product(range(self.p), repeat=self.degree))]

    def unit_group_order(self):
        return self.size() - 1

    def coefficients(self, x):
        return [Fraction(c) for c in x.rep]

    def format(self, rep):
        terms = []
        for i, c in enumerate(rep):
            if c:
                mono = "" if i == 0 else ("zeta" if i == 1 else f"zeta^{i}")
                terms.append(str(c) if not mono else (mono if c == 1 else f"{c}*{mono}"))
        return " + ".join(terms) if terms else "0"


# ---------------------------------------------------------------- elements

class FieldElement:
    __slots__ = ("field", "rep")

    def __init__(self, field: Field, rep):
        self.field = field
        self.rep = rep

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise MixedFields(f"cannot combine {self.field} and {other.field}")
            return other.rep
        if isinstance(other, (int, Fraction)):
            return self.field(other).rep
        return None

    def __add__(self, other):
        r = self._coerce(other)
        if r is None:
            return NotImplemented
        return FieldElement(self.field, self.field._add(self.rep, r))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.rep))

    def __sub__(self, other):
        r = self._coerce(other)
        if r is None:
            return NotImplemented
        f = self.field
        return FieldElement(f, f._add(self.rep, f._neg(r)))

    def __rsub__(self, other):
        r = self._coerce(other)
        if r is None:
            return NotImplemented
        f = self.field
        return FieldElement(f, f._add(r, f._neg(self.rep)))

    def __mul__(self, other):
        r = self._coerce(other)
        if r is None:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.rep, r))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.field._is_zero(self.rep):
            raise DivisionByZero(f"division by zero in {self.field}")
        return FieldElement(self.field, self.field._inv(self.rep))

    def __truediv__(self, other):
        r = self._coerce(other)
        if r is None:
            return NotImplemented
        return self * FieldElement(self.field, r).inverse()

    def __rtruediv__(self, other):
        r = self._coerce(other)
        if r is None:
            return NotImplemented
        return FieldElement(self.field, r) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = self.field.one
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def is_zero(self) -> bool:
        return self.field._is_zero(self.rep)

    def is_one(self) -> bool:
        return self.rep == self.field._from_int(1)

    def __bool__(self):
        return not self.field._is_zero(self.rep)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return other.field is self.field and other.rep == self.rep
        if isinstance(other, (int, Fraction)):
            return self.rep == self.field(other).rep
        return NotImplemented

    def __hash__(self):
        return hash((self.field.spec, self.rep))

    def __repr__(self):
        return self.field.format(self.rep)

    __str__ = __repr__


# ----------------------------------------------------------- roots of unity

def multiplicative_order(x: FieldElement) -> int:
    """Order of ``x`` in the unit group, or 0 when it is not a root of unity."""
    if x.is_zero():
        raise DivisionByZero("zero has no multiplicative order")
    n = x.field.unit_group_order()
    if x ** n != 1:
        return 0
    for q in prime_factors(n):
        while n % q == 0 and x ** (n // q) == 1:
            n //= q
    return n


def _has_exact_order(x: FieldElement, m: int) -> bool:
    return x ** m == 1 and all(x ** (m // q) != 1 for q in prime_factors(m))


def primitive_root_of_unity(field: Field, m: int) -> FieldElement:
    """An element of multiplicative order exactly ``m``.

    In characteristic zero the answer is a power of the canonical generator
    (zeta_m itself for Q(zeta_m)); in finite fields it is the smallest element
    of order ``m`` in the field's enumeration order.
    """
    if m < 1:
        raise InvalidSpec(f"order must be positive, got {m}")
    n = field.unit_group_order()
    if n % m:
        raise NoSuchRoot(f"{field} has no primitive {m}-th root of unity")
    if m == 1:
        return field.one
    if field.is_finite():
        for x in field.elements():
            if x and _has_exact_order(x, m):
                return x
        raise NoSuchRoot(f"{field} has no primitive {m}-th root of unity")
    if isinstance(field, RationalField):
        return field(-1)
    zeta = field.gen
    w = zeta if field.m % 2 == 0 else -zeta
    return w ** (n // m)


def roots_of_unity(field: Field, n: int) -> list[FieldElement]:
    """All solutions of x^n = 1 in ``field``."""
    if n < 1:
        raise InvalidSpec("order must be positive")
    full = field.unit_group_order()
    order = math.gcd(full, n)
    w = primitive_root_of_unity(field, order)
    return [w ** k for k in range(order)]
