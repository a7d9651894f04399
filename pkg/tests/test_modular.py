import itertools
import math
import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from charsum import modular
from charsum.constructions import construct_lie, hn_presentation
from charsum.hopf import HopfPresentation, character_group, validate_character
from charsum.ring import cyclotomic, extension_field, prime_field
from charsum.sums import sigma_brute, sigma_skew

from conftest import hn


# ----------------------------------------------------------------- phi

def test_phi_examples():
    assert modular.varphi(5, 4, 1) == -1
    assert modular.varphi(3, 1, 2) == 1
    assert modular.varphi_closed(3, 1, 2) == 1


def test_phi_at_zero_exponent_is_geometric_series():
    # l^0 = 1 for every l, so phi(0, z) = z + ... + z^p = z (1 - z)^(p - 1)
    for p in (2, 3, 5, 7):
        F = prime_field(p)
        for z in F.elements():
            direct = sum((z ** l for l in range(1, p + 1)), F.zero)
            assert modular.varphi(p, 0, z) == direct == z * (1 - z) ** (p - 1)
        assert modular.varphi(p, 0, 1) == 0
    assert modular.varphi(3, 0, 2) == 2


def eulerian_numbers(n):
    """A(n, k) from the standard recurrence, independent of the solver."""
    row = [1]
    for m in range(2, n + 1):
        row = [(k + 1) * (row[k] if k < len(row) else 0)
               + (m - k) * (row[k - 1] if k >= 1 else 0) for k in range(m)]
    return row


def test_eulerian_coefficients_small():
    assert modular.eulerian_coeffs(1) == (1,)
    assert modular.eulerian_coeffs(2) == (1, 1)
    assert modular.eulerian_coeffs(3) == (1, 4, 1)


@pytest.mark.parametrize("f0", range(1, 13))
def test_eulerian_coefficients_match_recurrence(f0):
    assert list(modular.eulerian_coeffs(f0)) == eulerian_numbers(f0)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_phi_periodic_in_exponent(p):
    F = prime_field(p)
    for f in range(1, 2 * p):
        for z in F.elements():
            assert modular.varphi(p, f, z) == modular.varphi(p, f + p - 1, z)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_phi_at_one(p):
    for f in range(1, 3 * (p - 1) + 1):
        value = modular.varphi(p, f, 1)
        assert value == (-1 if f % (p - 1) == 0 else 0)


def test_phi_over_extension_field():
    F = extension_field(3, (1, 0, 1))
    for z in F.elements():
        for f in range(1, 5):
            assert modular.varphi_direct(3, f, z) == modular.varphi_closed(3, f, z)


# ---------------------------------------------------------- multinomials

def test_multinomial_examples():
    assert modular.multinomial_mod(2, [3]) == 1
    assert modular.multinomial_mod(2, [1, 2]) == 1
    assert modular.multinomial_mod(2, [1, 1]) == 0


@settings(max_examples=300, deadline=None)
@given(st.sampled_from([2, 3, 5, 7, 11]), st.lists(st.integers(0, 60), min_size=1, max_size=5))
def test_lucas_matches_factorials(p, parts):
    exact = math.factorial(sum(parts))
    for l in parts:
        exact //= math.factorial(l)
    assert modular.multinomial_mod(p, parts) == exact % p
    assert modular.lnom_divisible(p, parts) == (exact % p == 0)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 64), min_size=2, max_size=4))
def test_binary_digit_criterion(parts):
    odd = modular.multinomial_mod(2, parts) == 1
    disjoint = all(a & b == 0 for a, b in itertools.combinations(parts, 2))
    assert odd == disjoint


# ------------------------------------------------------------- permanents

def test_permanent_examples():
    F = prime_field(7)
    eye = [[F(int(i == j)) for j in range(3)] for i in range(3)]
    assert modular.permanent(eye) == 1
    assert modular.permanent([[1, 2], [3, 4]]) == 10


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_permanent_and_determinant_match_sympy(rows):
    M = sympy.Matrix(rows)
    assert modular.permanent(rows) == M.per()
    assert modular.determinant(rows) == M.det()


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(0, 3), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_permanent_is_determinant_in_char_two(rows):
    F = extension_field(2, (1, 1, 1))
    A = [[F.elements()[x] for x in row] for row in rows]
    assert modular.permanent(A) == modular.determinant(A)


# ------------------------------------------------------- abelian closed forms

def test_split_vanishes_with_pseudo_primitive_letter_char0():
    F = cyclotomic(6)
    P = HopfPresentation.build([("K", 0)], [("x", "K", "K"), ("y", "K", None)])
    Pi = character_group([validate_character(P, F, {"K": F.gen, "x": 0, "y": 1})])
    rep = modular.sigma_abelian_split(Pi, "x*y")
    assert rep.closed == 0 == rep.brute


def test_split_char2_mixed_letters():
    F = extension_field(2, (1, 1, 1))
    P = HopfPresentation.build([("K", 0)], [("x", None, None), ("y", "K", None)])
    gens = [validate_character(P, F, {"K": 1, "x": 1, "y": 0}),
            validate_character(P, F, {"K": F.gen, "x": 0, "y": 1})]
    Pi = character_group(gens, cap=64)
    assert Pi.is_abelian()
    rep = modular.sigma_abelian_split(Pi, "x*y*y")
    assert rep.agree


def test_abelian_closed_single_letter_matches_case2(h1, q4):
    Pi = character_group([hn(h1, q4, 1 + q4.gen, q4.gen)])
    assert modular.sigma_abelian_closed(Pi, "h1").closed == sigma_skew(Pi, "h1").closed


def test_abelian_closed_order_three(h2):
    F = cyclotomic(3)
    a1, a2 = F(5), F.gen - 2
    Pi = character_group([hn(h2, F, [a1, a2], F.gen)])
    rep = modular.sigma_abelian_closed(Pi, "h1*h2")
    assert rep.closed == 3 * (a1 / (F.gen - 1)) * (a2 / (F.gen - 1)) == rep.brute
    assert rep.checks["level_constant"]


# --------------------------------------------------- pseudo-primitive char p

def _elementary(F, rows):
    n = len(rows[0])
    P = HopfPresentation.build([], [(f"h{i}", None, None) for i in range(1, n + 1)])
    gens = [validate_character(P, F, {f"h{i + 1}": v for i, v in enumerate(r)}) for r in rows]
    return character_group(gens, cap=4096)


def test_pseudo_char2_square_is_determinant():
    F = prime_field(2)
    rows = [[1, 1, 0], [0, 1, 1], [0, 0, 1]]
    Pi = _elementary(F, rows)
    rep = modular.sigma_pseudo_charp(Pi, "h1*h2*h3")
    A = [[F(r[i]) for r in rows] for i in range(3)]
    assert rep.closed == modular.determinant(A) == modular.permanent(A) == rep.brute


def test_pseudo_square_odd_p_vanishes():
    F = prime_field(3)
    Pi = _elementary(F, [[1, 2], [0, 1]])
    rep = modular.sigma_pseudo_charp(Pi, "h1*h2")
    assert rep.closed == 0 == rep.brute


@pytest.mark.parametrize("p,n,k", [(2, 3, 2), (3, 4, 2), (3, 2, 1), (5, 4, 1)])
def test_pseudo_construction_value(p, n, k):
    F = prime_field(p)
    r = F(p - 1)
    c = construct_lie(p, n, k, r)
    rep = modular.sigma_pseudo_charp(c.group, c.monomial)
    assert rep.closed == r == rep.brute


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_pseudo_suite_instances(seed):
    from charsum.suites import _pseudo_instance
    rng = random.Random(seed)
    p, k = rng.choice([2, 3]), rng.randint(1, 3)
    n = rng.randint(max(1, (k + 1) // 2), 6)
    Pi, P, F = _pseudo_instance(rng, p, k, n, rng.random() < 0.5)
    mono = "*".join(f"h{i}" for i in range(1, n + 1))
    rep = modular.sigma_pseudo_charp(Pi, mono)
    assert rep.agree
    if n % (p - 1):
        assert rep.brute == 0


# ------------------------------------------------------------ skip sums

def test_skip_sum_examples():
    assert modular.binomial_skip_sum(3, 2) == 4
    assert modular.binomial_skip_sum(9, 1) == 512
    assert modular.binomial_skip_sum(4, 7) == 1


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 20), st.integers(1, 8))
def test_skip_sum_counts_subsets(n, m):
    assert modular.binomial_skip_sum(n, m) == sum(math.comb(n, j) for j in range(0, n + 1, m))
