"""Weights of smash products RW # Sym(V) with W a Weyl group.

A weight is a character of the smash product: a linear character of W
together with a linear form on V that is invariant under W. Invariance forces
a weight to vanish on most simple roots; which ones survive depends only on
the Dynkin diagram and on whether the characteristic is 2.

Conventions: simple roots are numbered as in Bourbaki; the Cartan entry
``a_ij`` is ``2(alpha_i, alpha_j)/(alpha_i, alpha_i)``; in simply-laced
types every root counts as short. B_2 and C_2 coincide and are both built
with B_2 numbering (alpha_1 long, alpha_2 short).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DependentGenerators, InvalidRootSystem, WrongCharacteristic
from .hopf import HopfPresentation, FixedZero, SelfInverse, WordIsOne
from .modular import multinomial_mod
from .ring import Field, FieldElement
from .sums import SigmaReport

_RANKS = {"A": range(1, 9), "B": range(2, 9), "C": range(2, 9), "D": range(4, 9),
          "E": range(6, 9), "F": (4,), "G": (2,)}


def _edges(kind: str, n: int) -> list[tuple[int, int, int]]:
    """Dynkin edges (i, j, bond) with 0-based nodes; bond 2 or 3 points i(long) -> j(short)."""
    if kind == "A":
        return [(i, i + 1, 1) for i in range(n - 1)]
    if kind == "B" or (kind == "C" and n == 2):
        return [(i, i + 1, 1) for i in range(n - 2)] + [(n - 2, n - 1, 2)]
    if kind == "C":
        return [(i, i + 1, 1) for i in range(n - 2)] + [(n - 1, n - 2, 2)]
    if kind == "D":
        return [(i, i + 1, 1) for i in range(n - 2)] + [(n - 3, n - 1, 1)]
    if kind == "E":
        return [(0, 2, 1), (1, 3, 1)] + [(i, i + 1, 1) for i in range(2, n - 1)]
    if kind == "F":
        return [(0, 1, 1), (1, 2, 2), (2, 3, 1)]
    return [(1, 0, 3)]  # G_2: alpha_1 short, alpha_2 long


def short_roots_table(kind: str, n: int) -> set[int]:
    """Short simple roots (0-based), read from the standard tables."""
    if kind in "ADE":
        return set(range(n))
    if kind == "B" or (kind == "C" and n == 2):
        return {n - 1}
    if kind == "C":
        return set(range(n - 1))
    if kind == "F":
        return {2, 3}
    return {0}


def cartan_matrix(kind: str, n: int) -> list[list[int]]:
    if kind not in _RANKS or n not in _RANKS[kind]:
        raise InvalidRootSystem(f"no root system {kind}_{n}")
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, bond in _edges(kind, n):
        # i long, j short: (alpha_i, alpha_i) = bond (alpha_j, alpha_j)
        C[i][j] = -1
        C[j][i] = -bond
    return C


def root_lengths(C: list[list[int]]) -> list[Fraction]:
    """Squared lengths up to scale, from the symmetrizing condition d_i a_ij = d_j a_ji."""
    n = len(C)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and C[i][j] and d[j] is None:
                    # (alpha_i, alpha_j) = d_i a_ij / 2 = d_j a_ji / 2
                    d[j] = d[i] * C[i][j] / C[j][i]
                    stack.append(j)
    return d  # type: ignore[return-value]


@dataclass(frozen=True)
class RootSystemData:
    components: tuple[tuple[str, int], ...]
    central_rank: int = 0

    def __post_init__(self):
        for kind, n in self.components:
            if kind not in _RANKS or n not in _RANKS[kind]:
                raise InvalidRootSystem(f"no root system {kind}_{n}")
        if self.central_rank < 0:
            raise InvalidRootSystem("central rank must be non-negative")

    @classmethod
    def parse(cls, text: str, central_rank: int = 0) -> "RootSystemData":
        """``"B3 x A1"`` style description."""
        comps = []
        for part in text.replace("+", "x").split("x"):
            part = part.strip()
            if part:
                try:
                    comps.append((part[0].upper(), int(part[1:])))
                except ValueError:
                    raise InvalidRootSystem(f"cannot read {part!r}") from None
        return cls(tuple(comps), central_rank)

    @property
    def rank(self) -> int:
        return sum(n for _, n in self.components)

    def roots(self) -> list[tuple[int, str, int, int]]:
        """(global index, type, rank, local index) for each simple root."""
        out, g = [], 0
        for kind, n in self.components:
            for i in range(n):
                out.append((g, kind, n, i))
                g += 1
        return out

    def labels(self) -> list[str]:
        return [f"{kind}{n}.a{i + 1}" + (f"#{c}" if self._repeated(kind, n) else "")
                for c, (_, kind, n, i) in zip(self._comp_ids(), self.roots())]

    def _comp_ids(self):
        for c, (_, n) in enumerate(self.components):
            yield from [c] * n

    def _repeated(self, kind, n) -> bool:
        return self.components.count((kind, n)) > 1


def killed_roots(data: RootSystemData, char: int) -> frozenset[int]:
    """Simple roots on which every weight vanishes.

    Outside characteristic 2 every simple root is killed. In characteristic 2
    the Dynkin diagram is scanned for rank-2 subdiagrams: both roots of an
    A_2 or G_2 pair are killed, and the long root of a B_2 pair.
    """
    total = data.rank
    if char != 2:
        return frozenset(range(total))
    killed = set()
    offset = 0
    for kind, n in data.components:
        C = cartan_matrix(kind, n)
        lengths = root_lengths(C)
        for i, j in itertools.combinations(range(n), 2):
            bond = C[i][j] * C[j][i]
            if bond in (1, 3):
                killed |= {offset + i, offset + j}
            elif bond == 2:
                killed.add(offset + (i if lengths[i] > lengths[j] else j))
        offset += n
    return frozenset(killed)


def surviving_roots_rule(data: RootSystemData, char: int) -> frozenset[int]:
    """Table-based description of the survivors, independent of the diagram scan.

    Characteristic 2 only: the unique short simple root of each component
    other than G_2 that has exactly one short simple root.
    """
    if char != 2:
        return frozenset()
    out, offset = set(), 0
    for kind, n in data.components:
        short = short_roots_table(kind, n)
        if kind != "G" and len(short) == 1:
            out.add(offset + next(iter(short)))
        offset += n
    return frozenset(out)


def _sign_classes(kind: str, n: int) -> list[list[int]]:
    """Simple reflections grouped by conjugacy (joined along simple bonds)."""
    C = cartan_matrix(kind, n)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in itertools.combinations(range(n), 2):
        if C[i][j] * C[j][i] == 1:
            parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


@dataclass
class WeightDescription:
    data: RootSystemData
    characteristic: int
    killed: frozenset[int]
    sign_classes: list[list[int]]
    weyl_rank: int
    coordinates: list[str] = field(default_factory=list)

    def summary(self) -> str:
        coords = ", ".join(self.coordinates) or "none"
        if self.characteristic == 2:
            return f"Gamma = (V')^*, V' spanned by {coords}"
        return f"Gamma = (Z/2)^{self.weyl_rank} x V_0^*, V_0 spanned by {coords}"


def smash_weights(data: RootSystemData, fld: Field) -> WeightDescription:
    """Shape of the weight group: Gamma_W x V_0^* off characteristic 2, (V')^* in it."""
    char = fld.characteristic
    killed = killed_roots(data, char)
    classes = []
    offset = 0
    for kind, n in data.components:
        classes += [[offset + i for i in c] for c in _sign_classes(kind, n)]
        offset += n
    labels = data.labels()
    coords = [f"v{j + 1}" for j in range(data.central_rank)]
    if char == 2:
        coords += [labels[i] for i in range(data.rank) if i not in killed]
    return WeightDescription(data, char, killed, classes,
                             0 if char == 2 else len(classes), coords)


def smash_presentation(data: RootSystemData, fld: Field) -> HopfPresentation:
    """Commutative model of the smash product adequate for its characters.

    Simple reflections are grouplikes ``s1, s2, ...`` of order 2; simple roots
    ``r1, ...`` and central coordinates ``v1, ...`` are primitive. Killed
    roots are constrained to zero and reflections in one conjugacy class to
    equal values.
    """
    desc = smash_weights(data, fld)
    r = data.rank
    grouplikes = [(f"s{i + 1}", 2) for i in range(r)]
    skews = [(f"r{i + 1}", None, None) for i in range(r)]
    skews += [(f"v{j + 1}", None, None) for j in range(data.central_rank)]
    cons = [SelfInverse(f"s{i + 1}") for i in range(r)]
    cons += [FixedZero(f"r{i + 1}") for i in sorted(desc.killed)]
    for cls in desc.sign_classes:
        for i in cls[1:]:
            cons.append(WordIsOne(((f"s{cls[0] + 1}", 1), (f"s{i + 1}", 1))))
    return HopfPresentation.build(grouplikes, skews, (), cons, name="smash")


def sigma_alpha_power(values: list[FieldElement], n: int) -> SigmaReport:
    """Sum of alpha^n over Pi = (Z/2)^k given by gamma_i(alpha) = values[i], char 2.

    closed: sum over compositions l of n into k positive parts of the
    multinomial mod 2 times prod gamma_i^l_i. brute: sum over subsets K of
    (sum_{i in K} gamma_i)^n.
    """
    if not values:
        raise DependentGenerators("need at least one generator")
    if n < 1:
        raise ValueError("n must be positive")
    F = values[0].field
    if F.characteristic != 2:
        raise WrongCharacteristic("characteristic 2 required")
    k = len(values)
    sums = []
    for mask in range(1 << k):
        s = F.zero
        for i in range(k):
            if mask >> i & 1:
                s = s + values[i]
        sums.append(s)
    if len(set(sums)) != len(sums):
        raise DependentGenerators("values are linearly dependent over F_2")
    brute = F.zero
    for s in sums:
        brute = brute + s ** n
    closed = F.zero
    for cuts in itertools.combinations(range(1, n), k - 1):
        parts = [b - a for a, b in zip((0,) + cuts, cuts + (n,))]
        if multinomial_mod(2, parts):
            term = F.one
            for v, l in zip(values, parts):
                term = term * v ** l
            closed = closed + term
    weight = bin(n).count("1")
    checks = {"binary_weight": closed.is_zero() or k <= weight}
    return SigmaReport(brute, closed, "T7.alpha_power", checks=checks, order=1 << k)
