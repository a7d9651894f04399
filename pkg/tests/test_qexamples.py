import pytest

from charsum import qexamples as qx
from charsum.errors import ConstraintViolated
from charsum.hopf import Monomial, char_eval, character_group, validate_character
from charsum.ring import cyclotomic, prime_field, rational
from charsum.sums import sigma_auto, sigma_brute


def cyclic_group_ring(l, F):
    P = qx.build_group_ring(1, l)
    return P, character_group(qx.enumerate_weights(P, F, l))


@pytest.mark.parametrize("m", range(-8, 9))
def test_group_ring_sums(m):
    F = cyclotomic(4)
    P, Pi = cyclic_group_ring(4, F)
    assert len(Pi) == 4
    mono = Monomial.of(*(["K1"] * abs(m))) if m >= 0 else Monomial((("K1", m),))
    expected = 4 if m % 4 == 0 else 0
    assert sigma_brute(Pi, mono) == expected


def test_group_ring_order_one():
    P = qx.build_group_ring(1, 1)
    ws = qx.enumerate_weights(P, cyclotomic(4), 1)
    assert len(ws) == 1 and ws[0]["K1"] == 1


def test_uql_weights_are_signs():
    F = cyclotomic(8)
    P = qx.build_uql(2, 8)
    ws = qx.enumerate_weights(P, F, 8)
    assert len(ws) == 4 and all(w["K1"] ** 2 == 1 for w in ws)
    with pytest.raises(ConstraintViolated):
        validate_character(P, F, {"K1": F.gen, "K2": 1})
    Pi = character_group(ws)
    assert sigma_brute(Pi, "K1*K2") == 0
    assert sigma_brute(Pi, "K1^2*K2^4") == 4
    assert sigma_brute(Pi, "K1*E1") == 0


@pytest.mark.parametrize("n", [1, 2, 3])
def test_borel_weight_count(n):
    F = cyclotomic(3)
    ws = qx.enumerate_weights(qx.build_borel(n, 3), F, 3)
    assert len(ws) == 3 ** n


def test_affine_space_weights():
    F = prime_field(7)
    ws = qx.enumerate_weights(qx.build_affine_space(2, 3), F, 3)
    assert len(ws) == 9 and all(w["X1"] == 0 for w in ws)


def test_graded_sums():
    F = cyclotomic(4)
    P, Pi = cyclic_group_ring(4, F)
    assert qx.sigma_graded(Pi, qx.GradedElement([(F(1), Monomial.of("K1"))])).closed == 0
    P2 = qx.build_group_ring(1, 2)
    Pi2 = character_group(qx.enumerate_weights(P2, F, 2))
    Pi4 = Pi
    x = qx.GradedElement([(F(2), Monomial(())), (F(3), Monomial.of("K1"))])
    rep = qx.sigma_graded(Pi4, x)
    assert rep.closed == 8 == rep.brute
    x2 = qx.GradedElement([(F(2), Monomial(())), (F(3), Monomial.of("K1", "K1"))])
    rep = qx.sigma_graded(Pi2, x2)
    assert rep.closed == 10 == rep.brute


def test_graded_killed_terms():
    F = cyclotomic(8)
    P = qx.build_uql(1, 8)
    Pi = character_group(qx.enumerate_weights(P, F, 8))
    x = qx.GradedElement([(F(5), Monomial.of("K1", "E1")), (F(1), Monomial.of("F1"))])
    rep = qx.sigma_graded(Pi, x)
    assert rep.closed == 0 == rep.brute


def test_virasoro():
    F = cyclotomic(3)
    P = qx.build_virasoro()
    Pi = character_group([validate_character(P, F, {"T": F.gen})])
    assert len(Pi) == 3
    assert qx.sigma_virasoro(Pi, Monomial.of(*["T"] * 6)).closed == 3
    rep = qx.sigma_virasoro(Pi, Monomial.of("T", "T"))
    assert rep.closed == 0 == rep.brute
    rep = qx.sigma_virasoro(Pi, Monomial.of("T", "T", "T", "c"))
    assert rep.closed == 0 == rep.brute


def test_quantum_gl():
    F = cyclotomic(3)
    P = qx.build_quantum_gl(2)
    Pi = character_group([validate_character(P, F, {"u11": F.gen, "u22": 1})])
    assert sigma_brute(Pi, Monomial.of("u11", "u11", "u11")) == 3
    assert sigma_brute(Pi, "u11") == 0
    assert sigma_brute(Pi, "u12") == 0
    assert sigma_auto(Pi, "u11^3").consistent


def test_quantum_sl_determinant():
    F = cyclotomic(5)
    P = qx.build_quantum_sl(2)
    chi = validate_character(P, F, {"u11": F.gen, "u22": F.gen ** 4})
    assert chi["u22"] == 1 / chi["u11"]
    assert char_eval(chi, Monomial.of("u11", "u22")) == 1
    with pytest.raises(ConstraintViolated):
        validate_character(P, F, {"u11": F.gen, "u22": F.gen})


def test_rational_weights_are_signs():
    ws = qx.enumerate_weights(qx.build_group_ring(2, 4), rational(), 4)
    assert len(ws) == 4
