import random

import pytest
from hypothesis import given, settings, strategies as st

from charsum import constructions as cons
from charsum.errors import BadChain, BadShape, CharTooSmall, ZeroTargetDisallowed
from charsum.group import element_order
from charsum.hopf import char_inverse, convolve, counit
from charsum.ring import cyclotomic, extension_field, prime_field, rational

from conftest import hn


def test_hn_counit():
    F = cyclotomic(4)
    eps = counit(cons.hn_presentation(3), F)
    assert [eps[f"h{i}"] for i in (1, 2, 3)] == [0, 0, 0] and eps["g"] == 1


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=6, max_size=6), st.integers(0, 11), st.integers(0, 11))
def test_hn_group_law(vals, i, j):
    F = cyclotomic(12)
    P = cons.hn_presentation(3)
    z, w = F.gen ** i, F.gen ** j
    a, b = [F(x) for x in vals[:3]], [F(x) for x in vals[3:]]
    x, y = hn(P, F, a, z), hn(P, F, b, w)
    xy = convolve(x, y)
    assert xy["g"] == z * w
    assert [xy[f"h{k}"] for k in (1, 2, 3)] == [a[k] + z * b[k] for k in range(3)]
    inv = char_inverse(x)
    assert [inv[f"h{k}"] for k in (1, 2, 3)] == [-(1 / z) * a[k] for k in range(3)]


def test_lie_small_cases():
    F2, F3 = prime_field(2), prime_field(3)
    c = cons.construct_lie(2, 1, 1, F2(1))
    assert len(c.group) == 2 and c.brute() == 1
    G4 = extension_field(2, (1, 1, 1))
    c = cons.construct_lie(2, 1, 1, G4.gen)
    assert c.brute() == G4.gen
    for r in F3.elements():
        c = cons.construct_lie(3, 2, 1, r)
        assert len(c.group) == 3 and c.verify()
    for r in G4.elements():
        c = cons.construct_lie(2, 3, 2, r)
        assert len(c.group) == 4 and c.verify()


def test_lie_errors():
    F = prime_field(3)
    with pytest.raises(BadShape):
        cons.construct_lie(3, 3, 1, F(1))
    with pytest.raises(BadShape):
        cons.construct_lie(3, 2, 2, F(1))
    with pytest.raises(BadShape):
        cons.construct_lie(2, 2, 1, F(1))
    with pytest.raises(ZeroTargetDisallowed):
        cons.construct_lie(2, 2, 2, prime_field(2)(0))


def test_cyclic_small_cases():
    Q = rational()
    c = cons.construct_cyclic(2, 1, Q(7))
    assert c.params["a"][0] == 7 and c.verify()
    c = cons.construct_cyclic(2, 3, Q(5))
    assert c.params["s"] == 4 and c.verify()
    F = cyclotomic(6)
    c = cons.construct_cyclic(6, 4, 1 + F.gen)
    assert element_order(c.group, c.group.elements[1]) == 6 == len(c.group)


def test_cyclic_errors():
    with pytest.raises(BadShape):
        cons.construct_cyclic(3, 1, cyclotomic(3)(1))
    with pytest.raises(CharTooSmall):
        cons.construct_cyclic(2, 7, prime_field(97)(1))
    assert cons.construct_cyclic(4, 6, prime_field(97)(3)).verify()


def test_abelian_small_cases():
    Q = rational()
    c = cons.construct_abelian([2], 1, Q(3))
    assert c.params["a"] == [3] and c.verify()
    F = cyclotomic(4)
    c = cons.construct_abelian([2, 4], 1, F(5))
    assert c.params["branch"] == "free_block" and c.verify()
    assert cons.group_matches_chain(c, [2, 4]) and cons.quotient_check(c, resamples=2)
    c = cons.construct_abelian([2, 2], 2, F.gen)
    assert c.params["branch"] == "tensor" and c.params["subsets"] == 1 and c.verify()
    c = cons.construct_abelian([4], 3, F.gen - 2)
    assert c.params["branch"] == "cyclic" and c.verify()


def test_abelian_errors():
    F = cyclotomic(4)
    with pytest.raises(BadChain):
        cons.construct_abelian([4, 2], 2, F(1))
    with pytest.raises(BadChain):
        cons.construct_abelian([3], 1, cyclotomic(3)(1))
    with pytest.raises(BadChain):
        cons.construct_abelian([], 1, F(1))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_random_targets_all_kinds(seed):
    rng = random.Random(seed)
    F = cyclotomic(4)
    r = F.from_coeffs([rng.randint(-5, 5), rng.randint(-5, 5)])
    assert cons.construct_cyclic(rng.choice([2, 4]), rng.randint(1, 6), r).verify()
    d = rng.choice([[2], [4], [2, 2], [2, 4]])
    c = cons.construct_abelian(d, rng.randint(1, 4), r)
    assert c.verify() and cons.group_matches_chain(c, d)
    G9 = extension_field(3, (1, 0, 1))
    s = rng.choice(G9.elements())
    assert cons.construct_lie(3, 2 * rng.randint(1, 3), 1, s).verify()
