from fractions import Fraction

import pytest

from arithfuchs.cyclo import certified_sign, cos_element, sin_element, stabilizer
from arithfuchs.families import (
    NotPrime,
    TooSmall,
    b_value,
    elkies,
    gamma_p,
    verify_elkies,
    verify_gamma_p,
)
from arithfuchs.invariants import Verdict, minus_sin_squared, period_test, ramification
from arithfuchs.places import archimedean_places
from arithfuchs.quat import order_membership

PRIMES = (5, 7, 11, 13)

# checks that cannot hold over Q(sin 2 pi/p): b_p lives in the index-2
# subfield Q(cos 2 pi/p), so each of its real values occurs at two places
SINE_FIELD_FAILURES = ["b_p_sign_pattern", "fuchsian", "order_closure"]


def test_b_5_text_value():
    assert b_value(5) == cos_element(1, 5) - 1 + Fraction(32, 25)


@pytest.mark.parametrize("p", PRIMES)
def test_gamma_p_field(p):
    data = gamma_p(p)
    assert data.field.degree == p - 1
    assert data.field.is_totally_real()
    assert stabilizer(sin_element(1, p)) == stabilizer((2 * cos_element(1, 4 * p)).lift(4 * p))


@pytest.mark.parametrize("p", PRIMES)
def test_b_p_window(p):
    r = 1 - Fraction(32, p * p)
    assert certified_sign(cos_element(1, p) - r) > 0
    assert certified_sign(r - cos_element(2, p)) > 0


@pytest.mark.parametrize("p", PRIMES)
def test_b_p_positive_at_exactly_two_sine_field_places(p):
    data = gamma_p(p)
    signs = [certified_sign(data.b_p, v.representative) for v in archimedean_places(data.field)]
    assert signs.count(1) == 2 and signs[0] == 1


def test_b_5_sign_values():
    rep = verify_gamma_p(5)
    got = [(s["embedding"], s["sign"], round(s["value"], 3)) for s in rep.details["b_p_signs"]]
    assert got == [(1, 1, 0.589), (3, -1, -0.529), (7, -1, -0.529), (9, 1, 0.589)]


@pytest.mark.parametrize("p", PRIMES)
def test_verify_gamma_p_report(p):
    rep = verify_gamma_p(p)
    assert rep.failures() == SINE_FIELD_FAILURES
    assert rep.details["order_closure"]["failure"] == "norm"
    for q in (5, 7, 11, 13):
        assert rep.checks[f"period_{q}"]
        expected = "yes" if q == p else "no"
        assert rep.details["odd_periods"][str(q)]["verdict"] == expected


@pytest.mark.parametrize("p", PRIMES)
def test_descended_gamma_p(p):
    desc = verify_gamma_p(p).details["descended"]
    assert desc["field"]["degree"] == (p - 1) // 2
    assert [s["sign"] for s in desc["b_p_signs"]] == [1] + [-1] * ((p - 3) // 2)
    assert desc["fuchsian"] and desc["rescaled_order_closure"]


def test_j_is_not_integral_in_the_gamma_5_order():
    data = gamma_p(5)
    assert order_membership(data.order, data.algebra.j) is not None
    # j^2 = b_5 has a denominator of 50
    assert order_membership(data.order, data.algebra.j * data.algebra.j) is None


@pytest.mark.parametrize("p", PRIMES)
def test_period_witness(p):
    data = gamma_p(p)
    r = period_test(data.algebra, p, ramification(data.algebra))
    assert r.in_period_set is Verdict.YES
    assert r.witness * r.witness == data.algebra.scalar(minus_sin_squared(p))


def test_gamma_p_q_list():
    rep = verify_gamma_p(7, q_list=(3, 7))
    assert "period_3" not in rep.checks
    assert rep.details["odd_periods"]["3"]["asserted"] is False


def test_gamma_p_input_errors():
    with pytest.raises(NotPrime):
        gamma_p(9)
    with pytest.raises(TooSmall):
        gamma_p(3)


def test_elkies_data():
    data = elkies()
    assert data.field.degree == 3
    assert data.trusted_ram_finite == frozenset()
    assert data.sigma.exponent_mod(7) == 2


def test_verify_elkies():
    rep = verify_elkies(200)
    assert rep.passed, rep.failures()
    table = {row["p"]: row for row in rep.details["splitting"]}
    assert (table[7]["e"], table[7]["g"]) == (3, 1)
    assert table[13]["g"] == 3 and table[13]["orbit_sizes"] == [3]
    assert table[2]["f"] == 3
    assert 7 in rep.details["period_set"]["members"]


def test_verify_elkies_bound():
    with pytest.raises(ValueError):
        verify_elkies(13)
