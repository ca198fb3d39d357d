"""Acceptance criteria 1 to 9.

Each criterion prints one ``PASS``/``FAIL`` line.  Run standalone with
``python3 tests/test_acceptance.py`` or through pytest.
"""

import json
import random
import sys
import time
from fractions import Fraction
from importlib import resources

import jsonschema
import pytest
from sympy import factorint, primerange

from arithfuchs.cli import run
from arithfuchs.cyclo import (
    AbelianField,
    CycloElement,
    certified_sign,
    cos_element,
    galois_apply,
    identity_exponent,
    primitive_element,
    sin_element,
    stabilizer,
    totient,
    units,
)
from arithfuchs.families import elkies, gamma_p
from arithfuchs.galois import (
    AlgebraInvariantData,
    conjugate_invariants,
    same_algebra,
    synthetic_ramification,
    verify_period_invariance,
)
from arithfuchs.invariants import (
    Verdict,
    fuchsian_check,
    minus_sin_squared,
    period_set,
    period_test,
    ram_infinity,
    ramification,
)
from arithfuchs.places import (
    archimedean_places,
    hilbert_symbol_finite,
    local_is_square,
    padic_context,
    splitting_type,
)
from arithfuchs.quat import QuaternionAlgebra, matrix_determinant, matrix_image, order_closure_check

GAMMA_PRIMES = (5, 7, 11, 13)


def _report(n, ok, detail=""):
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'}{'  ' + detail if detail else ''}", flush=True)


# -- 1 --------------------------------------------------------------------------


def criterion_1():
    k = AbelianField.real_cyclotomic(7)
    bad = []
    for p in primerange(2, 200):
        e, f, g, _ = splitting_type(k, p)
        want_g = 3 if p % 7 in (1, 6) else 1
        if g != want_g or (p == 7 and (e, f, g) != (3, 1, 1)):
            bad.append(p)
    return not bad, f"mismatched primes {bad}" if bad else "46 primes"


# -- 2 --------------------------------------------------------------------------


def criterion_2():
    A = elkies().algebra
    ram = ram_infinity(A)
    ident = identity_exponent(A.field.n)
    ok = (len(ram) == 2 and all(v.representative != ident for v in ram)
          and len(archimedean_places(A.field)) == 3 and fuchsian_check(A, ram))
    return ok, "Ram_inf = " + ", ".join(v.label for v in ram)


# -- 3 --------------------------------------------------------------------------


def criterion_3():
    problems = []
    for p in GAMMA_PRIMES:
        data = gamma_p(p)
        if stabilizer(sin_element(1, p)) != stabilizer((2 * cos_element(1, 4 * p)).lift(4 * p)):
            problems.append(f"p={p}: field equality")
        signs = [certified_sign(data.b_p, v.representative) for v in archimedean_places(data.field)]
        if not (signs[0] > 0 and all(s < 0 for s in signs[1:])):
            problems.append(f"p={p}: b_p signs {''.join('+' if s > 0 else '-' for s in signs)}")
        if not fuchsian_check(data.algebra):
            problems.append(f"p={p}: not Fuchsian")
        closure = order_closure_check(data.order)
        if not closure:
            problems.append(f"p={p}: order not closed ({closure.failure})")
    return not problems, "; ".join(problems)


# -- 4 --------------------------------------------------------------------------


def criterion_4():
    problems = []
    for p in GAMMA_PRIMES:
        A = gamma_p(p).algebra
        ram = ramification(A)
        for q in GAMMA_PRIMES:
            r = period_test(A, q, ram)
            if q == p:
                w = r.witness
                ok = (r.in_period_set is Verdict.YES and w is not None
                      and w * w == A.scalar(minus_sin_squared(q)))
            else:
                ok = r.in_period_set is Verdict.NO and not r.subfield_ok
            if not ok:
                problems.append(f"(p={p}, q={q}) -> {r.in_period_set}")
    return not problems, "; ".join(problems) or "16 pairs"


# -- 5 --------------------------------------------------------------------------


def criterion_5():
    algebras = [gamma_p(p).algebra for p in GAMMA_PRIMES] + [elkies().algebra]
    for p in GAMMA_PRIMES:
        k = AbelianField.real_cyclotomic(p)
        algebras.append(QuaternionAlgebra(k, -1, cos_element(1, p) - 1 + Fraction(32, p * p)))
    bad = [A for A in algebras if period_test(A, 2, ramification(A)).in_period_set is not Verdict.YES]
    return not bad, f"{len(algebras)} algebras"


# -- 6 --------------------------------------------------------------------------


def criterion_6():
    data = elkies()
    ps = period_set(data.algebra, ramification(data.algebra, data.trusted_ram_finite))
    ok = {1, 2, 3, 7, 14} <= ps.members and all(totient(m) <= 6 for m in ps.members)
    return ok, f"period set {sorted(ps.members)}"


# -- 7 --------------------------------------------------------------------------


def criterion_7():
    data = elkies()
    A = data.algebra
    ram = ramification(A, data.trusted_ram_finite)
    D = AlgebraInvariantData.from_ramification(ram)
    fixed = same_algebra(D, conjugate_invariants(D, data.sigma))
    inv = verify_period_invariance(A, ram, data.sigma)
    ok = fixed and inv["periods_equal"]
    syn = synthetic_ramification(A, splitting_type(A.field, 13).places)
    for t in units(7):
        ok &= verify_period_invariance(A, syn, t)["periods_equal"]
    return ok, "Elkies data and the orbit above 13"


# -- 8 --------------------------------------------------------------------------


def _rand_frac(rng, lo=-6, hi=6):
    return Fraction(rng.randint(lo, hi), rng.randint(1, 3))


def _field_element(rng, k, powers, lo=-4, hi=4):
    out = CycloElement.rational(0, k.n)
    for p in powers:
        out = out + p * rng.randint(lo, hi)
    return out


def _powers(k):
    g = primitive_element(k)
    out = [CycloElement.rational(1, k.n)]
    for _ in range(k.degree - 1):
        out.append(out[-1] * g)
    return out


def _cyclo(rng, n):
    return CycloElement(n, [_rand_frac(rng) for _ in range(totient(n))])


def _quaternion(rng, A, powers):
    return A.element(*[_field_element(rng, A.field, powers, -2, 2) for _ in range(4)])


def _hilbert_2adic(a, b):
    fa, fb = factorint(a).get(2, 0), factorint(b).get(2, 0)
    u, w = a // 2 ** fa, b // 2 ** fb

    def eps(x):
        return ((x - 1) // 2) % 2

    def omega(x):
        return ((x * x - 1) // 8) % 2

    return -1 if (eps(u) * eps(w) + fa * omega(w) + fb * omega(u)) % 2 else 1


def property_quaternions(rng, n):
    cases = 0
    for A in (elkies().algebra, gamma_p(5).algebra):
        powers = _powers(A.field)
        for _ in range(n // 2):
            x, y = _quaternion(rng, A, powers), _quaternion(rng, A, powers)
            assert (x * y).norm() == x.norm() * y.norm()
            cases += 1
    return cases


def property_matrix_image(rng, n):
    cases = 0
    for A in (elkies().algebra, gamma_p(5).algebra):
        powers = _powers(A.field)
        for _ in range(n // 2):
            x, y = _quaternion(rng, A, powers), _quaternion(rng, A, powers)
            mx, my = matrix_image(x), matrix_image(y)
            assert matrix_image(x * y) == mx * my
            assert matrix_image(x + y) == mx + my
            assert matrix_determinant(mx) == x.norm()
            cases += 1
    return cases


def property_cyclotomic(rng, n):
    group = units(12)
    for _ in range(n):
        x, y, z = _cyclo(rng, 12), _cyclo(rng, 12), _cyclo(rng, 12)
        assert (x + y) * z == x * z + y * z
        assert (x * y) * z == x * (y * z)
        assert x * y == y * x
        t = rng.choice(group)
        assert galois_apply(t, x * y) == galois_apply(t, x) * galois_apply(t, y)
        assert galois_apply(t, x + y) == galois_apply(t, x) + galois_apply(t, y)
    return n


def property_hilbert(rng, n):
    k = AbelianField.real_cyclotomic(7)
    powers = _powers(k)
    tame = [v for p in (13, 29, 3, 5) for v in splitting_type(k, p).places]

    def draw():
        while True:
            x = _field_element(rng, k, powers, -5, 5)
            if x:
                return x

    for _ in range(n):
        v = rng.choice(tame)
        a, b, c = draw(), draw(), draw()
        assert hilbert_symbol_finite(a, b, v) == hilbert_symbol_finite(b, a, v)
        assert hilbert_symbol_finite(a, -a, v) == 1
        assert hilbert_symbol_finite(a, b * c, v) == hilbert_symbol_finite(a, b, v) * hilbert_symbol_finite(a, c, v)
    return n


def property_brute_force_squares(rng, n):
    from test_places import CASES, _precision, _squares

    assert all(v.p <= 13 and v.f <= 2 for _, v in CASES)
    cases = 0
    while cases < n:
        _, v = rng.choice(CASES)
        k = v.field
        d = totient(max(k.n, 1))
        x = CycloElement(max(k.n, 1), [Fraction(rng.randint(-20, 20)) for _ in range(d)]) * v.p ** rng.randint(0, 2)
        if not x:
            continue
        s = _precision(v)
        assert s <= 3
        ctx = padic_context(v, s)
        image = tuple(ctx.evaluate_integral([int(c) for c in x.coeffs]))
        if image == ():
            continue
        assert local_is_square(v, x) == (image in _squares(v, s))
        cases += 1
    return cases


def property_parity(rng, n):
    QQ = AbelianField.rationals()
    two = splitting_type(QQ, 2).places[0]
    for _ in range(n):
        a, b = rng.choice([-1, 1]) * rng.randint(1, 300), rng.choice([-1, 1]) * rng.randint(1, 300)
        ram = ramification(QuaternionAlgebra(QQ, a, b))
        assert ram.complete and ram.cardinality % 2 == 0
        # parity at P(2) agrees with the independent closed form
        assert (two in ram.ram_finite) == (_hilbert_2adic(a, b) == -1)
    return n


PROPERTIES = [
    ("quaternion norm multiplicativity", property_quaternions, 1000),
    ("matrix_image homomorphism", property_matrix_image, 1000),
    ("cyclotomic ring axioms and Galois homomorphism", property_cyclotomic, 1000),
    ("Hilbert symmetry, (a,-a) and multiplicativity", property_hilbert, 1000),
    ("local squares against brute force", property_brute_force_squares, 200),
    ("parity of |Ram|", property_parity, 1000),
]


def criterion_8():
    rng = random.Random(20261016)
    start = time.time()
    parts = []
    for name, fn, n in PROPERTIES:
        got = fn(rng, n)
        assert got >= n, name
        parts.append(f"{name}: {got}")
    elapsed = time.time() - start
    return elapsed < 120, f"{elapsed:.0f}s; " + ", ".join(parts)


# -- 9 --------------------------------------------------------------------------


def criterion_9():
    schema = json.loads(resources.files("arithfuchs").joinpath("report_schema.json").read_text())
    problems = []
    for argv, want in [
        (["verify", "elkies", "--json"], 0),
        (["verify", "gamma-p", "--p", "5", "--json"], 0),
        (["ram", "--field", "Qcos:7", "--a", "cos(1/7", "--b", "c", "--json"], 2),
        (["field", "Qbogus:3", "--json"], 2),
        (["periods", "--field", "Qcos:7", "--a", "c", "--b", "c", "--trust-ramf", "empty", "--json"], 0),
    ]:
        code, report = run(argv)
        if code != want:
            problems.append(f"{' '.join(argv[:3])} exited {code}, want {want}")
        try:
            jsonschema.validate(json.loads(json.dumps(report)), schema)
        except jsonschema.ValidationError as exc:
            problems.append(f"{' '.join(argv[:3])}: schema: {exc.message}")
    return not problems, "; ".join(problems)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9]


def _check(n):
    try:
        ok, detail = CRITERIA[n - 1]()
    except AssertionError as exc:
        ok, detail = False, f"assertion failed: {exc}"
    _report(n, ok, detail)
    return ok, detail


@pytest.mark.parametrize("n", range(1, 10))
def test_criterion(n, capsys):
    with capsys.disabled():
        print()
        ok, detail = _check(n)
    assert ok, detail


if __name__ == "__main__":
    results = [_check(n)[0] for n in range(1, 10)]
    sys.exit(0 if all(results) else 1)
