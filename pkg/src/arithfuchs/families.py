"""The two worked families: the co-compact groups Gamma_p and the (2,3,7) algebra.

Each ``verify_*`` function returns a ``VerificationReport`` whose ``checks``
map a check name to a boolean; ``details`` carries the supporting data.
"""

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from sympy import isprime, primerange

from .cyclo import (
    AbelianField,
    GaloisAutomorphism,
    approx,
    certified_sign,
    cos_element,
    format_element,
    identity_exponent,
    sin_element,
    stabilizer,
)
from .galois import (
    AlgebraInvariantData,
    conjugate_invariants,
    orbit,
    same_algebra,
    verify_period_invariance,
)
from .invariants import (
    Verdict,
    fuchsian_check,
    minus_sin_squared,
    period_set,
    period_test,
    ram_infinity,
    ramification,
)
from .places import archimedean_places, splitting_type
from .quat import (
    QuaternionAlgebra,
    QuaternionOrder,
    matrix_determinant,
    matrix_image,
    order_closure_check,
)


class NotPrime(ValueError):
    pass


class TooSmall(ValueError):
    pass


@dataclass
class VerificationReport:
    name: str
    checks: dict = dc_field(default_factory=dict)
    details: dict = dc_field(default_factory=dict)

    @property
    def passed(self):
        return all(self.checks.values())

    def failures(self):
        return [k for k, ok in self.checks.items() if not ok]

    def as_dict(self):
        return {"name": self.name, "passed": self.passed, "checks": dict(self.checks), "details": self.details}


# ---------------------------------------------------------------------------
# Gamma_p


@dataclass
class GammaPData:
    p: int
    field: AbelianField
    b_p: object
    algebra: QuaternionAlgebra
    order: QuaternionOrder
    generator: object


def b_value(p):
    """cos(2 pi/p) - 1 + 32/p^2."""
    return cos_element(1, p) - 1 + Fraction(32, p * p)


def _check_prime(p):
    if not isinstance(p, int) or not isprime(p):
        raise NotPrime(f"{p} is not prime")
    if p < 5:
        raise TooSmall(f"p = {p}: the construction needs p >= 5")


def gamma_p(p):
    """(-1, b_p) over Q(sin 2 pi/p) with the order Z[2cos(pi/2p)]<1, i, j, k>."""
    _check_prime(p)
    s = sin_element(1, p)
    g = 2 * cos_element(1, 4 * p)
    H = stabilizer(s)
    if H != stabilizer(g.lift(s.n)):
        raise ArithmeticError(f"Q(sin 2pi/{p}) and Q(cos pi/{2 * p}) differ")
    k = AbelianField(s.n, H)
    A = QuaternionAlgebra(k, -1, b_value(p))
    return GammaPData(p, k, A.b, A, QuaternionOrder(A, A.basis, g), g)


def _signs(x, k):
    return [(v.representative, certified_sign(x, v.representative)) for v in archimedean_places(k)]


def verify_gamma_p(p, q_list=(5, 7, 11, 13)):
    data = gamma_p(p)
    k, A, b = data.field, data.algebra, data.b_p
    rep = VerificationReport(f"gamma-p p={p}")
    checks, det = rep.checks, rep.details
    det["field"] = k.describe()
    det["b_p"] = format_element(b)

    checks["totally_real"] = k.is_totally_real()
    checks["field_equality_sin_cos"] = True  # gamma_p raises otherwise
    checks["degree_is_p_minus_1"] = k.degree == p - 1

    # cos(4 pi/p) < 1 - 32/p^2 < cos(2 pi/p): b_p lies in the intended window
    r = 1 - Fraction(32, p * p)
    checks["b_p_window"] = (certified_sign(cos_element(1, p) - r) > 0
                            and certified_sign(r - cos_element(2, p)) > 0)

    signs = _signs(b, k)
    det["b_p_signs"] = [{"embedding": t, "sign": s, "value": approx(b, t, 6)} for t, s in signs]
    checks["b_p_sign_pattern"] = signs[0][1] > 0 and all(s < 0 for _, s in signs[1:])
    ram_inf = ram_infinity(A)
    det["ram_infinite"] = [v.label for v in ram_inf]
    checks["fuchsian"] = fuchsian_check(A, ram_inf)

    closure = order_closure_check(data.order)
    checks["order_closure"] = bool(closure)
    det["order_closure"] = {"closed": closure.closed, "failure": closure.failure,
                            "detail": [str(x) for x in closure.detail]}

    ram = ramification(A)
    det["ramification"] = ram.as_dict()
    periods = {}
    for q in q_list:
        if q == 3:
            periods["3"] = {"verdict": str(period_test(A, 3, ram).in_period_set), "asserted": False}
            continue
        report = period_test(A, q, ram)
        yes = report.in_period_set is Verdict.YES
        if q == p:
            w = report.witness
            certified = (yes and w is not None and w * w == minus_sin_squared(q)
                         and w.coords[1] == sin_element(1, q))
        else:
            certified = not report.subfield_ok and report.in_period_set is Verdict.NO
        checks[f"period_{q}"] = certified
        periods[str(q)] = {"verdict": str(report.in_period_set), "subfield_ok": report.subfield_ok,
                           "witness": None if report.witness is None
                           else [format_element(x) for x in report.witness.coords],
                           "asserted": True}
    det["odd_periods"] = periods
    checks["period_2"] = period_test(A, 2, ram).in_period_set is Verdict.YES
    det["descended"] = _descended_gamma_p(p)
    return rep


def _descended_gamma_p(p):
    """The same b_p over Q(cos 2 pi/p), and an integral rescaling of j."""
    kc = AbelianField.real_cyclotomic(p)
    b = kc.element(b_value(p))
    signs = _signs(b, kc)
    Ac = QuaternionAlgebra(kc, -1, b)
    b_int = b * (4 * p ** 4)
    A_int = QuaternionAlgebra(kc, -1, b_int)
    g = 2 * cos_element(1, p)
    closed = order_closure_check(QuaternionOrder(A_int, A_int.basis, g))
    return {
        "field": kc.describe(),
        "b_p_signs": [{"embedding": t, "sign": s} for t, s in signs],
        "fuchsian": fuchsian_check(Ac),
        "rescaled_b": format_element(b_int),
        "rescaled_order_closure": closed.closed,
    }


# ---------------------------------------------------------------------------
# the (2,3,7) algebra


@dataclass
class ElkiesData:
    field: AbelianField
    c: object
    algebra: QuaternionAlgebra
    order: QuaternionOrder
    j_prime: object
    trusted_ram_finite: frozenset
    sigma: GaloisAutomorphism


def elkies():
    """(c, c) over Q(zeta_7)^+, c = 2cos(2 pi/7), with the order Z[c]<1, i, j', ij'>."""
    k = AbelianField.real_cyclotomic(7)
    c = 2 * cos_element(1, 7)
    A = QuaternionAlgebra(k, c, c, "elkies")
    jp = (A.one + A.i * c + A.j * (c * c + c + 1)) / 2
    O = QuaternionOrder(A, (A.one, A.i, jp, A.i * jp), c)
    return ElkiesData(k, k.element(c), A, O, jp, frozenset(), GaloisAutomorphism(7, 2))


def verify_elkies(prime_bound=200):
    if prime_bound < 14:
        raise ValueError("prime_bound must be at least 14")
    data = elkies()
    k, A, c = data.field, data.algebra, data.c
    rep = VerificationReport(f"elkies prime_bound={prime_bound}")
    checks, det = rep.checks, rep.details
    det["field"] = k.describe()
    det["c"] = format_element(c)

    one = matrix_image(A.one)
    mi, mj = matrix_image(A.i), matrix_image(A.j)
    basis = (A.one, A.i, data.j_prime, A.i * data.j_prime)
    checks["matrix_relations"] = (
        mi * mi == one.scale(c) and mj * mj == one.scale(c)
        and mi * mj == matrix_image(-(A.j * A.i))
        and all(matrix_image(x * y) == matrix_image(x) * matrix_image(y) for x in basis for y in basis)
        and all(matrix_determinant(matrix_image(x)) == x.norm() for x in basis)
    )
    closure = order_closure_check(data.order)
    checks["order_closure"] = bool(closure)

    ram_inf = ram_infinity(A)
    det["ram_infinite"] = [v.label for v in ram_inf]
    ident = identity_exponent(k.n)
    checks["ram_infinite_non_identity"] = (
        len(ram_inf) == 2 and all(v.representative != ident for v in ram_inf))
    checks["fuchsian"] = fuchsian_check(A, ram_inf)

    table, split_ok, orbit_ok = [], True, True
    for p in primerange(2, prime_bound + 1):
        e, f, g, places = splitting_type(k, p)
        expect = 3 if p % 7 in (1, 6) else 1
        split_ok &= g == expect and (p != 7 or (e, f, g) == (3, 1, 1))
        sizes = sorted({len(orbit(v, data.sigma)) for v in places})
        orbit_ok &= sizes == [g]
        table.append({"p": p, "e": e, "f": f, "g": g, "orbit_sizes": sizes})
    det["splitting"] = table
    checks["splitting_table"] = split_ok
    checks["galois_orbits"] = orbit_ok

    ram = ramification(A, trusted_finite=data.trusted_ram_finite)
    det["ramification"] = ram.as_dict()
    ps = period_set(A, ram)
    det["period_set"] = ps.as_dict()
    checks["periods_contain_1_2_3_7_14"] = {1, 2, 3, 7, 14} <= ps.members
    D = AlgebraInvariantData.from_ramification(ram)
    checks["conjugate_fixed"] = same_algebra(D, conjugate_invariants(D, data.sigma))
    inv = verify_period_invariance(A, ram, data.sigma)
    det["period_invariance"] = inv
    checks["period_invariance"] = inv["periods_equal"] and inv["odd_equations_equal"]
    return rep
