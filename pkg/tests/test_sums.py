import random

import pytest
from hypothesis import given, settings, strategies as st

from charsum.constructions import hn_presentation
from charsum.errors import FactorConditionFails, NotStabilizing
from charsum.group import commutator_subgroup
from charsum.hopf import HopfPresentation, character_group, convolve, validate_character
from charsum.qexamples import build_group_ring
from charsum.ring import cyclotomic, extension_field, prime_field, rational
from charsum.sums import (
    level_function,
    membership_GPi,
    pseudo_primitive_power,
    sigma_auto,
    sigma_brute,
    sigma_direct_product,
    sigma_grouplike,
    sigma_product_general,
    sigma_skew,
    sigma_via_quotient,
    stabilizer_in_Pi,
    verify_convolution_identities,
)
from charsum import suites

from conftest import hn


def full_dual_z4():
    F = cyclotomic(4)
    P = build_group_ring(1, 4)
    return character_group([validate_character(P, F, {"K1": F.gen})])


# ------------------------------------------------------------- brute force

def test_sum_of_one_is_order(h1, q4):
    Pi = character_group([hn(h1, q4, 1, q4.gen)])
    assert sigma_brute(Pi, "") == 4


def test_order_two_group_gives_product_of_letters():
    F = rational()
    P = hn_presentation(3)
    Pi = character_group([hn(P, F, [2, 3, 5], -1)])
    assert sigma_brute(Pi, "h1*h2*h3") == 30


def test_annihilated_letter_sums_to_zero():
    F = cyclotomic(3)
    P = HopfPresentation.build([("K", 3)], [], ["e"])
    Pi = character_group([validate_character(P, F, {"K": F.gen})])
    rep = sigma_auto(Pi, "K*e")
    assert len(Pi) == 3 and rep.closed == 0 == rep.brute


# --------------------------------------------------------------- grouplike

def test_grouplike_sums_on_z4():
    Pi = full_dual_z4()
    assert len(Pi) == 4
    rep = sigma_grouplike(Pi, "K1")
    assert rep.closed == 0 == rep.brute and rep.path == "P5.nontrivial"
    assert sigma_grouplike(Pi, []).closed == 4
    assert sigma_grouplike(Pi, [("K1", 4)]).closed == 4


def test_membership():
    Pi = full_dual_z4()
    out = membership_GPi(Pi, "K1")
    assert not out.in_G_Pi and out.witness is not None and out.witness_value != 1
    assert membership_GPi(Pi, []).in_G_Pi
    F = cyclotomic(4)
    trivial = character_group([validate_character(build_group_ring(1, 4), F, {"K1": 1})])
    assert membership_GPi(trivial, "K1").in_G_Pi


# ----------------------------------------------------------- single letter

def test_case1_two_nontrivial_words():
    F = cyclotomic(4)
    P = HopfPresentation.build([("K", 4)], [("h", "K", "K^2")])
    Pi = character_group([validate_character(P, F, {"K": F.gen, "h": 1 + F.gen})])
    rep = sigma_skew(Pi, "h")
    assert rep.path == "T3.case1" and rep.closed == 0 == rep.brute


def test_case2_level_times_order(h1, q4):
    a = 2 - q4.gen
    Pi = character_group([hn(h1, q4, a, q4.gen)])
    rep = sigma_skew(Pi, "h1")
    assert rep.path == "T3.case2"
    assert rep.closed == 4 * a / (1 - q4.gen)
    # independent oracle: gamma^j(h) = a (1 - z^j)/(1 - z)
    geometric = sum((a * (1 - q4.gen ** j) / (1 - q4.gen) for j in range(4)), q4.zero)
    assert rep.brute == geometric
    assert rep.checks["witness_independent"]


def test_case3_char0_vanishes():
    F = cyclotomic(6)
    P = HopfPresentation.build([("K", 0), ("L", 0)], [("h", "K^2", "K^-2")])
    Pi = character_group([validate_character(P, F, {"K": -1, "L": F.gen, "h": 0})])
    rep = sigma_skew(Pi, "h")
    assert rep.path == "T3.case3" and rep.closed == 0 == rep.brute


def test_level_function(h1, q4):
    gamma = hn(h1, q4, 3, q4.gen)
    assert level_function(gamma, "h1") == 3 / (q4.gen - 1)
    g3 = convolve(gamma, convolve(gamma, gamma))
    assert level_function(g3, "h1") == level_function(gamma, "h1")


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 11), st.integers(0, 11), st.integers(-3, 3), st.integers(-3, 3))
def test_commuting_iff_equal_levels(i, j, a, b):
    F = cyclotomic(12)
    P = hn_presentation(1)
    z, w = F.gen ** i, F.gen ** j
    if z == 1 or w == 1:
        return
    mu, lam = hn(P, F, a, z), hn(P, F, b, w)
    commute = convolve(mu, lam)["h1"] == convolve(lam, mu)["h1"]
    assert commute == (level_function(mu, "h1") == level_function(lam, "h1"))


@pytest.mark.parametrize("m", range(1, 8))
def test_pseudo_primitive_power(m):
    F = cyclotomic(5)
    P = HopfPresentation.build([("K", 0)], [("h", "K", "K")])
    chi = validate_character(P, F, {"K": F.gen, "h": 2 + F.gen})
    lhs, rhs = pseudo_primitive_power(chi, "h", m)
    assert lhs == rhs


# ----------------------------------------------------------------- products

def test_product_with_vanishing_letters(q4):
    P = hn_presentation(3)
    Pi = character_group([hn(P, q4, [0, 0, 0], -1)])
    rep = sigma_product_general(Pi, "h1*h2*h3")
    assert rep.path == "Prod.zero_letters" and rep.closed == 0 == rep.brute


def test_vanishing_letters_rule_needs_product_word(h2, q4):
    # g_1 g_2 = g^2 is sent to 1, so the rule does not fire; the sum is still 0
    Pi = character_group([hn(h2, q4, [0, 0], -1)])
    rep = sigma_product_general(Pi, "h1*h2")
    assert rep.path != "Prod.zero_letters"
    assert rep.closed == 0 == rep.brute


def test_product_abelian_closed_form(h2):
    F = cyclotomic(3)
    a1, a2 = F(2), 1 + F.gen
    Pi = character_group([hn(h2, F, [a1, a2], F.gen)])
    rep = sigma_product_general(Pi, "h1*h2")
    expected = 3 * (a1 / (F.gen - 1)) * (a2 / (F.gen - 1))
    assert rep.closed == expected == rep.brute
    assert rep.checks.get("agrees:Tabel") is True


# ------------------------------------------------------------- stabilizers

def test_stabilizer_of_grouplike():
    Pi = full_dual_z4()
    st_ = stabilizer_in_Pi(Pi, "K1^2")
    expected = {chi for chi in Pi.elements if chi["K1"] ** 2 == 1}
    assert set(st_.group.elements) == expected


def test_stabilizer_of_letter_in_order_two_group(h1):
    F = rational()
    Pi = character_group([hn(h1, F, 3, -1)])
    st_ = stabilizer_in_Pi(Pi, "h1")
    assert len(st_.group) == 1 and len(st_.fixed) == 1


def _nonabelian_char2():
    F = extension_field(2, (1, 1, 1))
    P = HopfPresentation.build([("g", 0)], [("h", "g", None), ("x", None, None)])
    gens = [validate_character(P, F, {"g": 1, "h": 1, "x": 1}),
            validate_character(P, F, {"g": F.gen, "h": 0, "x": 0})]
    return character_group(gens, cap=256)


def test_quotient_by_commutator_for_pseudo_primitive():
    Pi = _nonabelian_char2()
    assert not Pi.is_abelian()
    D = commutator_subgroup(Pi)
    rep = sigma_via_quotient(Pi, D, "x*x*x", resamples=3, rng=random.Random(1))
    assert rep.agree and rep.checks["lift_independent"]
    trivial = Pi.subgroup([0])
    assert sigma_via_quotient(Pi, trivial, "x").closed == sigma_brute(Pi, "x")


def test_quotient_requires_stabilizing_subgroup(h1, q4):
    Pi = character_group([hn(h1, q4, 1, q4.gen)])
    with pytest.raises(NotStabilizing):
        sigma_via_quotient(Pi, Pi, "h1")


def test_quotient_resampling_suite():
    res = suites.suite_L1(random.Random(3), 64, count=20)
    assert res.ok, res.failures


# ----------------------------------------------------------- direct products

def _tensor_h1_h1(F, a1, a2, z1, z2):
    P = HopfPresentation.build([("g1", 0), ("g2", 0)], [("x1", "g1", None), ("x2", "g2", None)])
    c1 = validate_character(P, F, {"g1": z1, "g2": 1, "x1": a1, "x2": 0})
    c2 = validate_character(P, F, {"g1": 1, "g2": z2, "x1": 0, "x2": a2})
    return P, character_group([c1]), character_group([c2])


def test_direct_product_of_two_order_two_factors():
    F = rational()
    _, A, B = _tensor_h1_h1(F, F(3), F(7), F(-1), F(-1))
    rep = sigma_direct_product([A, B], ["x1", "x2"])
    assert rep.closed == 21 == rep.brute and rep.path == "Pstab3"


def test_direct_product_trivial_factor():
    F = rational()
    P, A, _ = _tensor_h1_h1(F, F(3), F(7), F(-1), F(-1))
    B = A.subgroup([0])
    assert sigma_direct_product([A, B], ["x1", "x2"]).closed == 0
    assert sigma_direct_product([A], ["x1"]).closed == sigma_brute(A, "x1")


def test_direct_product_condition_enforced():
    F = rational()
    P, A, B = _tensor_h1_h1(F, F(3), F(7), F(-1), F(-1))
    bad = character_group([validate_character(P, F, {"g1": 1, "g2": -1, "x1": 0, "x2": 1})])
    with pytest.raises(FactorConditionFails):
        sigma_direct_product([bad, B], ["x1", "x2"])


# --------------------------------------------------------------- identities

def test_identities_on_order_two(h1):
    F = rational()
    Pi = character_group([hn(h1, F, 5, -1)])
    rep = verify_convolution_identities(Pi, "h1")
    assert rep.ok and sum(p for p, _ in rep.counts.values()) > 0


# -------------------------------------------------- randomized suites (seeds)

@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_grouplike_suite_random_seeds(seed):
    assert suites.suite_P5(random.Random(seed), 128, count=10).ok


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_single_letter_suite_random_seeds(seed):
    res = suites.suite_T3(random.Random(seed), 128, count=8)
    assert res.ok, res.failures


@settings(max_examples=5, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_identity_suite_random_seeds(seed):
    res = suites.suite_E3E4(random.Random(seed), 16, count=5)
    assert res.ok, res.failures


@pytest.mark.parametrize("name", ["Pstab", "P8", "Tskew", "Ppower", "Tsk"])
def test_structural_suites(name):
    res = suites.run_suite(name, seed=11)
    assert res.ok, res.failures
