import itertools

import pytest
from hypothesis import given, settings, strategies as st

from charsum import hecke
from charsum.errors import DependentGenerators, InvalidRootSystem, WrongCharacteristic
from charsum.hopf import Monomial, character_group, validate_character
from charsum.modular import multinomial_mod
from charsum.ring import extension_field, prime_field, rational
from charsum.sums import sigma_brute

GF16 = extension_field(2, (1, 1, 0, 0, 1))
ALL_TYPES = [(k, n) for k, ranks in hecke._RANKS.items() for n in ranks]


def data(text, central=0):
    return hecke.RootSystemData.parse(text, central)


def test_a2_char3_kills_both():
    assert hecke.killed_roots(data("A2"), 3) == {0, 1}


def test_b2_char2_kills_long_root():
    assert hecke.killed_roots(data("B2"), 2) == {0}
    assert hecke.killed_roots(data("C2"), 2) == {0}


def test_g2_char2_kills_both():
    assert hecke.killed_roots(data("G2"), 2) == {0, 1}


@pytest.mark.parametrize("kind,n", ALL_TYPES)
@pytest.mark.parametrize("char", [0, 2, 3, 5])
def test_scan_matches_table_rule(kind, n, char):
    d = hecke.RootSystemData(((kind, n),))
    survivors = frozenset(range(n)) - hecke.killed_roots(d, char)
    assert survivors == hecke.surviving_roots_rule(d, char)


@pytest.mark.parametrize("kind,n", ALL_TYPES)
def test_cartan_matrix_is_symmetrizable(kind, n):
    C = hecke.cartan_matrix(kind, n)
    d = hecke.root_lengths(C)
    for i, j in itertools.product(range(n), repeat=2):
        assert d[i] * C[i][j] == d[j] * C[j][i]
    short = {i for i in range(n) if d[i] == min(d)}
    if kind in "ADE":
        assert short == set(range(n))
    else:
        assert short == hecke.short_roots_table(kind, n)


def test_invalid_root_systems():
    with pytest.raises(InvalidRootSystem):
        data("D3")
    with pytest.raises(InvalidRootSystem):
        data("E9")


def test_weight_shapes():
    w = hecke.smash_weights(data("A2"), rational())
    assert w.killed == {0, 1} and w.weyl_rank == 1 and w.coordinates == []
    w = hecke.smash_weights(data("B2"), prime_field(2))
    assert w.coordinates == ["B2.a2"] and w.weyl_rank == 0


def test_reflections_trivial_in_char2():
    P = hecke.smash_presentation(data("B2"), GF16)
    chi = validate_character(P, GF16, {"s1": 1, "s2": 1, "r1": 0, "r2": GF16.gen})
    assert chi["s1"] == 1 == chi["s2"]


def test_alpha_power_examples():
    x = GF16.gen
    for n in range(1, 9):
        assert hecke.sigma_alpha_power([x], n).closed == x ** n
    g1, g2 = x, x ** 2 + 1
    rep = hecke.sigma_alpha_power([g1, g2], 3)
    assert rep.closed == g1 * g2 ** 2 + g1 ** 2 * g2 == rep.brute


def test_alpha_power_errors():
    x = GF16.gen
    with pytest.raises(DependentGenerators):
        hecke.sigma_alpha_power([x, x], 2)
    with pytest.raises(WrongCharacteristic):
        hecke.sigma_alpha_power([prime_field(3)(1)], 2)


independent = st.lists(st.integers(1, 15), min_size=1, max_size=4, unique=True)


@settings(max_examples=150, deadline=None)
@given(independent, st.integers(1, 12))
def test_alpha_power_closed_equals_brute(idx, n):
    vals = [GF16.elements()[i] for i in idx]
    try:
        rep = hecke.sigma_alpha_power(vals, n)
    except DependentGenerators:
        return
    assert rep.agree
    if len(vals) > bin(n).count("1"):
        assert rep.closed == 0


def test_char3_root_letters_vanish():
    F = prime_field(3)
    P = hecke.smash_presentation(data("A2"), F)
    Pi = character_group([validate_character(P, F, {"s1": -1, "s2": -1, "r1": 0, "r2": 0})])
    assert len(Pi) == 2
    assert sigma_brute(Pi, "r1") == 0 and sigma_brute(Pi, "r1*r2*s1") == 0


def test_sign_classes_equal_on_simply_laced():
    F = prime_field(5)
    P = hecke.smash_presentation(data("A2"), F)
    from charsum.errors import ConstraintViolated
    with pytest.raises(ConstraintViolated):
        validate_character(P, F, {"s1": -1, "s2": 1, "r1": 0, "r2": 0})


def test_smash_model_sums_match_closed_form():
    x = GF16.gen
    P = hecke.smash_presentation(data("B3"), GF16)
    vals = [x, x ** 3 + 1]
    gens = [validate_character(P, GF16, {"s1": 1, "s2": 1, "s3": 1, "r1": 0, "r2": 0, "r3": v})
            for v in vals]
    Pi = character_group(gens)
    for n in range(1, 10):
        assert sigma_brute(Pi, Monomial.of(*["r3"] * n)) == hecke.sigma_alpha_power(vals, n).closed
