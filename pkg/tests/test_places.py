from fractions import Fraction
from functools import lru_cache
from itertools import product

import pytest
from hypothesis import assume, given, settings, strategies as st
from sympy import primerange

from arithfuchs import padic
from arithfuchs.cyclo import AbelianField, CycloElement, cos_element, sin_element, zeta
from arithfuchs.galois import act_on_place
from arithfuchs.places import (
    UnsupportedPlace,
    archimedean_places,
    hilbert_symbol_finite,
    hilbert_symbol_real,
    local_is_square,
    local_valuation_unit,
    padic_context,
    place_containing,
    rational_primes_to_check,
    splitting_type,
    valuation,
)

from strategies import C7, ELKIES_FIELD, field_elements, nonzero

QQ = AbelianField.rationals()


def test_elkies_splitting_examples():
    k = ELKIES_FIELD
    assert splitting_type(k, 2)[:3] == (1, 3, 1)
    assert splitting_type(k, 7)[:3] == (3, 1, 1)
    assert splitting_type(k, 13)[:3] == (1, 1, 3)
    assert splitting_type(k, 29)[:3] == (1, 1, 3)
    assert [v.label for v in splitting_type(k, 13).places] == ["P(13;1)", "P(13;2)", "P(13;3)"]


def test_splitting_efg_product():
    for k in (ELKIES_FIELD, AbelianField.generated_by(sin_element(1, 5))):
        for p in primerange(2, 60):
            e, f, g, places = splitting_type(k, p)
            assert e * f * g == k.degree
            assert len(places) == g


def test_gaussian_field_splitting():
    k = AbelianField(4, frozenset({1}))
    assert splitting_type(k, 2)[:3] == (2, 1, 1)
    assert splitting_type(k, 5)[:3] == (1, 1, 2)
    assert splitting_type(k, 7)[:3] == (1, 2, 1)


def test_place_containing():
    v = place_containing(ELKIES_FIELD, 13, 5)
    assert 5 in v.coset and v.p == 13


def test_archimedean_places():
    assert [v.label for v in archimedean_places(ELKIES_FIELD)] == ["inf[1]", "inf[2]", "inf[3]"]
    with pytest.raises(ValueError):
        archimedean_places(AbelianField(4, frozenset({1})))


def test_valuation():
    assert valuation(Fraction(50, 3), 5) == 2
    assert valuation(Fraction(50, 3), 3) == -1


def test_unsupported_places():
    with pytest.raises(UnsupportedPlace):
        local_is_square(splitting_type(ELKIES_FIELD, 7).places[0], C7)
    with pytest.raises(UnsupportedPlace):
        local_is_square(splitting_type(ELKIES_FIELD, 2).places[0], C7)


def test_squares_over_q():
    v = splitting_type(QQ, 13).places[0]
    # -1 and 4 are squares mod 13, 2 is not; 13 has odd valuation
    assert [local_is_square(v, x) for x in (-1, 13, 4, 2)] == [True, False, True, False]


def test_c_is_a_unit_at_13():
    for v in splitting_type(ELKIES_FIELD, 13).places:
        assert local_valuation_unit(padic_context(v, 4), C7)[0] == 0
        assert hilbert_symbol_finite(C7, C7, v) == 1


def test_high_valuation_upgrades_precision():
    v = splitting_type(QQ, 3).places[0]
    x = CycloElement.rational(3 ** 20 * 2)
    assert local_valuation_unit(padic_context(v, 2), x)[0] == 20
    assert not local_is_square(v, x)


def test_real_hilbert_symbol():
    v1, v2, v3 = archimedean_places(ELKIES_FIELD)
    assert hilbert_symbol_real(C7, C7, v1) == 1
    assert hilbert_symbol_real(C7, C7, v2) == -1
    assert hilbert_symbol_real(-1, -1, v1) == -1


def test_candidate_primes():
    b5 = cos_element(1, 5) - 1 + Fraction(32, 25)
    k = AbelianField.generated_by(sin_element(1, 5))
    assert rational_primes_to_check(k, [-1, b5]) == [2, 5, 19, 41]


# -- Hilbert symbols over Q against the Legendre symbol ------------------------


def _legendre(a, p):
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else 1


def _hilbert_q(a, b, p):
    """Classical tame symbol over Q."""
    alpha, beta = valuation(a, p), valuation(b, p)
    u = Fraction(a) / Fraction(p) ** alpha
    w = Fraction(b) / Fraction(p) ** beta
    u = u.numerator * pow(u.denominator, -1, p)
    w = w.numerator * pow(w.denominator, -1, p)
    sign = (-1) ** (alpha * beta * (p - 1) // 2)
    return sign * _legendre(u, p) ** beta * _legendre(w, p) ** alpha


nonzero_ints = st.integers(-400, 400).filter(bool)


@settings(max_examples=1000)
@given(nonzero_ints, nonzero_ints, st.sampled_from([3, 5, 7, 11, 13]))
def test_hilbert_matches_classical_formula(a, b, p):
    v = splitting_type(QQ, p).places[0]
    assert hilbert_symbol_finite(a, b, v) == _hilbert_q(a, b, p)


def test_hilbert_examples_over_q():
    v = splitting_type(QQ, 5).places[0]
    assert hilbert_symbol_finite(5, 2, v) == -1
    assert hilbert_symbol_finite(5, 4, v) == 1
    assert hilbert_symbol_finite(Fraction(3, 25), -3, v) == 1


# -- Hilbert symbol properties at tame places of Q(zeta_7)^+ --------------------

tame_places = [v for p in (13, 29, 3, 5) for v in splitting_type(ELKIES_FIELD, p).places]
elkies_elems = nonzero(field_elements(ELKIES_FIELD, st.integers(-5, 5).map(Fraction)))


@settings(max_examples=1000)
@given(elkies_elems, elkies_elems, st.sampled_from(tame_places))
def test_hilbert_symmetry(a, b, v):
    assert hilbert_symbol_finite(a, b, v) == hilbert_symbol_finite(b, a, v)


@settings(max_examples=1000)
@given(elkies_elems, st.sampled_from(tame_places))
def test_hilbert_a_minus_a(a, v):
    assert hilbert_symbol_finite(a, -a, v) == 1
    assert hilbert_symbol_finite(a, 1 - a, v) == 1 if a != 1 else True


@settings(max_examples=1000)
@given(elkies_elems, elkies_elems, elkies_elems, st.sampled_from(tame_places))
def test_hilbert_multiplicative(a, b, c, v):
    assert hilbert_symbol_finite(a, b * c, v) == hilbert_symbol_finite(a, b, v) * hilbert_symbol_finite(a, c, v)


@settings(max_examples=300)
@given(elkies_elems, st.sampled_from(tame_places), st.sampled_from([1, 2, 3]))
def test_local_square_galois_equivariant(x, v, t):
    from arithfuchs.cyclo import galois_apply

    assert local_is_square(act_on_place(t, v), galois_apply(t, x)) == local_is_square(v, x)


# -- local squares against brute force in O / p^s ------------------------------
# fields where every tame place has residue degree equal to the ambient one


BRUTE_FIELDS = {
    "Q": QQ,
    "Q(i)": AbelianField(4, frozenset({1})),
    "Q(zeta3)": AbelianField(3, frozenset({1})),
    "Q(zeta8)": AbelianField(8, frozenset({1})),
}


def _cases():
    out = []
    for name, k in BRUTE_FIELDS.items():
        for p in (3, 5, 7, 11, 13):
            if k.n % p == 0:
                continue
            for v in splitting_type(k, p).places:
                if v.f <= 2:
                    out.append((name, v))
    return out


CASES = _cases()


@lru_cache(maxsize=None)
def _squares(v, s):
    ctx = padic_context(v, s)
    m = ctx.modulus
    f = len(ctx.factor) - 1
    seen = set()
    for coeffs in product(range(m), repeat=f):
        y = padic.trim(list(coeffs))
        seen.add(tuple(ctx.mul(y, y)))
    return frozenset(seen)


def _precision(v):
    s = 3
    while v.p ** (s * (len(padic_context(v, 1).factor) - 1)) > 3000:
        s -= 1
    return s


@settings(max_examples=400)
@given(st.sampled_from(CASES), st.lists(st.integers(-20, 20), min_size=8, max_size=8), st.integers(0, 2))
def test_local_square_brute_force(case, coeffs, e):
    _, v = case
    k = v.field
    n = max(k.n, 1)
    d = len(CycloElement.rational(0, n).coeffs)
    x = CycloElement(n, [Fraction(c) for c in coeffs[:d]]) * v.p ** e
    assume(bool(x))
    s = _precision(v)
    ctx = padic_context(v, s)
    ints = [int(c) for c in x.coeffs]
    image = tuple(ctx.evaluate_integral(ints))
    assume(image != ())  # valuation below the working precision
    assert local_is_square(v, x) == (image in _squares(v, s))


def test_brute_force_case_count():
    assert len(CASES) >= 10
