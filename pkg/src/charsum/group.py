"""Finite groups stored extensionally.

A :class:`FiniteGroup` keeps its elements in a fixed order with the identity
at index 0. The multiplication table is built lazily. Groups produced by
:func:`closure` remember the Cayley graph of their generators, so the table
costs only integer lookups and no further products of the underlying objects.

Subgroups, Sylow subgroups, Hall complements and quotients all come back as
new :class:`FiniteGroup` instances whose elements are the same underlying
objects (coset representatives, for quotients).
"""

from __future__ import annotations

from collections import deque
from typing import Callable, Generic, Hashable, Iterable, Sequence, TypeVar

from .errors import (
    CapExceeded,
    InvalidTable,
    NoComplement,
    NotAMember,
    NotNormal,
    NotSolvable,
)
from .ring import prime_factors

E = TypeVar("E", bound=Hashable)


class FiniteGroup(Generic[E]):
    def __init__(self, elements: Sequence[E], table: list[list[int]] | None = None):
        self.elements: tuple[E, ...] = tuple(elements)
        self._index = {e: i for i, e in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise InvalidTable("repeated element")
        self._table = table
        self._inverse: list[int] | None = None
        # set by closure(): generator indices, right-multiplication graph and
        # a spanning tree (parent, generator) of that graph
        self.generators: list[int] = []
        self._cayley: list[list[int]] | None = None
        self._tree: list[tuple[int, int]] | None = None

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, e) -> bool:
        return e in self._index

    def __repr__(self) -> str:
        return f"<FiniteGroup of order {len(self)}>"

    def index(self, e: E) -> int:
        try:
            return self._index[e]
        except KeyError:
            raise NotAMember(repr(e)) from None

    @property
    def identity(self) -> E:
        return self.elements[0]

    @property
    def table(self) -> list[list[int]]:
        if self._table is None:
            self._table = self._table_from_cayley()
        return self._table

    def _table_from_cayley(self) -> list[list[int]]:
        n = len(self)
        cay, tree = self._cayley, self._tree
        table = [[0] * n for _ in range(n)]
        for i in range(n):
            row = table[i]
            row[0] = i
            for j in range(1, n):
                parent, s = tree[j]
                row[j] = cay[row[parent]][s]
        return table

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    @property
    def inverse(self) -> list[int]:
        if self._inverse is None:
            inv = [0] * len(self)
            for i, row in enumerate(self.table):
                inv[i] = row.index(0)
            self._inverse = inv
        return self._inverse

    def power(self, i: int, k: int) -> int:
        if k < 0:
            i, k = self.inverse[i], -k
        out = 0
        for _ in range(k):
            out = self.table[out][i]
        return out

    def order_of(self, i: int) -> int:
        k, x = 1, i
        while x != 0:
            x = self.table[x][i]
            k += 1
        return k

    def is_abelian(self) -> bool:
        if self._cayley is not None:
            cay, gens = self._cayley, self.generators
            return all(cay[gens[a]][b] == cay[gens[b]][a]
                       for a in range(len(gens)) for b in range(a + 1, len(gens)))
        t = self.table
        n = len(self)
        return all(t[i][j] == t[j][i] for i in range(n) for j in range(i + 1, n))

    # -- subgroups by index sets

    def generated(self, indices: Iterable[int]) -> frozenset[int]:
        """Index set of the subgroup generated by ``indices``."""
        gens = [g for g in set(indices) if g != 0]
        seen = {0}
        queue = deque([0])
        t = self.table
        while queue:
            x = queue.popleft()
            for g in gens:
                y = t[x][g]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def subgroup(self, indices: Iterable[int]) -> "FiniteGroup[E]":
        """The subgroup on a closed index set, with elements in index order."""
        idx = sorted(set(indices))
        if not idx or idx[0] != 0:
            raise InvalidTable("subgroup must contain the identity")
        pos = {g: k for k, g in enumerate(idx)}
        t = self.table
        try:
            table = [[pos[t[a][b]] for b in idx] for a in idx]
        except KeyError:
            raise InvalidTable("index set is not closed under multiplication") from None
        return FiniteGroup([self.elements[i] for i in idx], table)

    def indices_of(self, sub: "FiniteGroup[E]") -> frozenset[int]:
        return frozenset(self.index(e) for e in sub.elements)

    def subgroup_generated(self, elements: Iterable[E]) -> "FiniteGroup[E]":
        return self.subgroup(self.generated(self.index(e) for e in elements))


def from_table(table: Sequence[Sequence[int]], elements: Sequence | None = None,
               check: bool = True) -> FiniteGroup:
    """Group from an explicit multiplication table with identity at index 0."""
    n = len(table)
    tab = [list(r) for r in table]
    if check:
        if any(len(r) != n for r in tab) or any(not 0 <= x < n for r in tab for x in r):
            raise InvalidTable("table must be square with entries in range")
        if any(tab[0][i] != i or tab[i][0] != i for i in range(n)):
            raise InvalidTable("index 0 must be the identity")
        for r in tab:
            if sorted(r) != list(range(n)):
                raise InvalidTable("rows must be permutations")
        if n <= 64:
            for a in range(n):
                for b in range(n):
                    ab = tab[a][b]
                    for c in range(n):
                        if tab[ab][c] != tab[a][tab[b][c]]:
                            raise InvalidTable("table is not associative")
    return FiniteGroup(list(range(n)) if elements is None else elements, tab)


def closure(generators: Sequence[E], product: Callable[[E, E], E],
            inverse: Callable[[E], E], cap: int = 1024) -> FiniteGroup[E]:
    """Finite group generated by ``generators``; raises CapExceeded past ``cap``."""
    gens = list(generators)
    if not gens:
        raise ValueError("closure needs at least one generator")
    identity = product(gens[0], inverse(gens[0]))
    elements = [identity]
    index = {identity: 0}
    cayley: list[list[int]] = []
    tree = [(0, 0)]
    k = 0
    while k < len(elements):
        x = elements[k]
        row = []
        for s, g in enumerate(gens):
            y = product(x, g)
            j = index.get(y)
            if j is None:
                j = len(elements)
                if j >= cap:
                    raise CapExceeded(f"group has more than {cap} elements")
                index[y] = j
                elements.append(y)
                tree.append((k, s))
            row.append(j)
        cayley.append(row)
        k += 1
    G = FiniteGroup(elements)
    G._cayley = cayley
    G._tree = tree
    G.generators = [index[g] for g in gens]
    return G


def element_order(G: FiniteGroup[E], g: E) -> int:
    return G.order_of(G.index(g))


def commutator_subgroup(G: FiniteGroup[E]) -> FiniteGroup[E]:
    t, inv = G.table, G.inverse
    n = len(G)
    comms = {t[t[a][b]][t[inv[a]][inv[b]]] for a in range(n) for b in range(n)}
    return G.subgroup(G.generated(comms))


def derived_series(G: FiniteGroup[E]) -> list[FiniteGroup[E]]:
    series = [G]
    while True:
        D = commutator_subgroup(series[-1])
        if len(D) == len(series[-1]):
            return series
        series.append(D)


def is_solvable(G: FiniteGroup) -> bool:
    return len(derived_series(G)[-1]) == 1


def is_normal(G: FiniteGroup[E], N: FiniteGroup[E]) -> bool:
    members = G.indices_of(N)
    t, inv = G.table, G.inverse
    return all(t[t[g][n]][inv[g]] in members for g in range(len(G)) for n in members)


def _p_part(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def sylow_subgroup(G: FiniteGroup[E], p: int) -> FiniteGroup[E]:
    """A Sylow p-subgroup, grown greedily from elements in index order.

    A p-subgroup that is not yet Sylow always has an element of its
    normalizer outside it generating a larger p-group, so the greedy scan
    never gets stuck.
    """
    target = _p_part(len(G), p)
    cands = [i for i in range(1, len(G)) if _is_p_power(G.order_of(i), p)]
    if G.is_abelian():
        return G.subgroup([0] + cands)
    P = frozenset([0])
    while len(P) < target:
        for x in cands:
            if x in P:
                continue
            Q = G.generated(P | {x})
            if len(Q) <= target and _is_p_power(len(Q), p):
                P = Q
                break
        else:  # pragma: no cover - excluded by the argument above
            raise RuntimeError("Sylow search failed")
    return G.subgroup(P)


def hall_complement(G: FiniteGroup[E], p: int) -> FiniteGroup[E]:
    """A subgroup of order |G|/|G|_p (a Hall p'-subgroup) of a solvable group."""
    if not is_solvable(G):
        raise NotSolvable("Hall complements are only sought in solvable groups")
    target = len(G) // _p_part(len(G), p)
    cands = [i for i in range(1, len(G)) if G.order_of(i) % p]
    if G.is_abelian():
        return G.subgroup([0] + cands)
    seen: set[frozenset[int]] = set()

    def search(H: frozenset[int]):
        if len(H) == target:
            return H
        for x in cands:
            if x in H:
                continue
            K = G.generated(H | {x})
            if target % len(K) == 0 and K not in seen:
                seen.add(K)
                found = search(K)
                if found is not None:
                    return found
        return None

    H = search(frozenset([0]))
    if H is None:
        raise NoComplement(f"no subgroup of order {target}")
    return G.subgroup(H)


class QuotientGroup(FiniteGroup):
    """G/N with the lowest-index member of each coset as its representative."""

    def __init__(self, parent: FiniteGroup, normal: FiniteGroup, reps, table, cosets):
        super().__init__([parent.elements[r] for r in reps], table)
        self.parent = parent
        self.normal = normal
        self.reps = list(reps)
        self.cosets = cosets

    def coset_of(self, i: int) -> int:
        """Quotient index of the coset holding parent index ``i``."""
        return self._coset_of[i]


def quotient_group(G: FiniteGroup[E], N: FiniteGroup[E]) -> QuotientGroup:
    if not is_normal(G, N):
        raise NotNormal("subgroup is not normal")
    members = sorted(G.indices_of(N))
    t = G.table
    coset_of = [-1] * len(G)
    reps, cosets = [], []
    for i in range(len(G)):
        if coset_of[i] >= 0:
            continue
        c = sorted(t[i][n] for n in members)
        for x in c:
            coset_of[x] = len(reps)
        reps.append(i)
        cosets.append(c)
    table = [[coset_of[t[a][b]] for b in reps] for a in reps]
    Q = QuotientGroup(G, N, reps, table, cosets)
    Q._coset_of = coset_of
    return Q


def independent_generators(G: FiniteGroup[E]) -> list[int]:
    """Greedy generating set: each element is added when it enlarges the span."""
    span = frozenset([0])
    gens = []
    for i in range(1, len(G)):
        if i not in span:
            gens.append(i)
            span = G.generated(span | {i})
    return gens


def abelian_invariants(G: FiniteGroup) -> list[int]:
    """Invariant factors d_1 | d_2 | ... of a finite abelian group."""
    if not G.is_abelian():
        raise ValueError("group is not abelian")
    n = len(G)
    orders = [G.order_of(i) for i in range(n)]
    per_prime = []
    for p in prime_factors(n):
        # number of elements killed by p^j determines the p-primary partition
        logs = []
        j = 0
        while True:
            count = sum(1 for o in orders if (p ** j) % o == 0)
            e = 0
            while p ** e < count:
                e += 1
            logs.append(e)
            if count == _p_part(n, p):
                break
            j += 1
        # logs[j] - logs[j-1] is the number of cyclic factors of order >= p^j
        exps = []
        for j in range(1, len(logs)):
            exps.append(logs[j] - logs[j - 1])
        parts = []
        for j in range(len(exps)):
            ge = exps[j]
            gt = exps[j + 1] if j + 1 < len(exps) else 0
            parts += [p ** (j + 1)] * (ge - gt)
        per_prime.append(sorted(parts, reverse=True))
    width = max((len(x) for x in per_prime), default=0)
    factors = []
    for k in range(width):
        d = 1
        for parts in per_prime:
            if k < len(parts):
                d *= parts[k]
        factors.append(d)
    return sorted(factors)
