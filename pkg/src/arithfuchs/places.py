"""Places of abelian fields, local square tests and Hilbert symbols.

Finite places are identified by Frobenius data only: a rational prime p and
a coset of D*H in (Z/NZ)*, D the decomposition group of p.  The coset
containing t labels the prime obtained from a fixed reference prime of
Q(zeta_N) by applying zeta -> zeta^t, so the Galois action on places is
coset multiplication.

Local arithmetic is only implemented at tame unramified places (p odd,
p not dividing N); everything else raises ``UnsupportedPlace``.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import NamedTuple

from sympy import primefactors

from . import padic
from .cyclo import (
    AbelianField,
    certified_sign,
    cosets,
    cyclotomic_polynomial,
    factorize,
    generated_subgroup,
    multiplicative_order,
    norm,
    totient,
    units,
)


class NotTotallyReal(ValueError):
    pass


class UnsupportedPlace(ValueError):
    pass


class ZeroElement(ValueError):
    pass


class PrecisionExhausted(ArithmeticError):
    pass


def valuation(n, p):
    """p-adic valuation of a nonzero integer or Fraction."""
    if isinstance(n, Fraction):
        return valuation(n.numerator, p) - valuation(n.denominator, p)
    if n == 0:
        raise ZeroElement("valuation of zero")
    v = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        v += 1
    return v


# ---------------------------------------------------------------------------
# archimedean places


@dataclass(frozen=True)
class ArchimedeanPlace:
    field: AbelianField
    representative: int

    @property
    def label(self):
        return f"inf[{self.representative}]"

    def sign(self, x):
        return certified_sign(self.field.element(x), self.representative)


def archimedean_places(k):
    """Real places of a totally real field; the identity embedding first."""
    if not k.is_totally_real():
        raise NotTotallyReal("field is not totally real")
    return [ArchimedeanPlace(k, min(c)) for c in cosets(k.fixing, k.n)]


# ---------------------------------------------------------------------------
# finite places


@dataclass(frozen=True)
class FinitePlace:
    field: AbelianField
    p: int
    coset: frozenset
    e: int
    f: int

    @property
    def representative(self):
        return min(self.coset)

    @property
    def label(self):
        return f"P({self.p};{self.representative})"

    @property
    def tame(self):
        return self.p != 2 and self.field.n % self.p != 0

    def __lt__(self, other):
        return (self.p, self.representative) < (other.p, other.representative)


class Splitting(NamedTuple):
    e: int
    f: int
    g: int
    places: tuple


def decomposition_groups(n, p):
    """Inertia and decomposition subgroups of p in (Z/nZ)*."""
    a, rest = 0, n
    while rest % p == 0:
        rest //= p
        a += 1
    pa = n // rest
    one_rest = 1 % rest
    inertia = frozenset(t for t in units(n) if t % rest == one_rest)
    # unit = p mod rest, = 1 mod p^a
    frob = next(t for t in range(n) if t % rest == p % rest and t % pa == 1 % pa)
    decomposition = generated_subgroup(set(inertia) | {frob}, n)
    return inertia, decomposition


@lru_cache(maxsize=None)
def splitting_type(k, p):
    """(e, f, g, places) of the rational prime p in k."""
    n = k.n
    inertia, decomposition = decomposition_groups(n, p)
    H = k.fixing
    IH = generated_subgroup(set(inertia) | set(H), n)
    DH = generated_subgroup(set(decomposition) | set(H), n)
    e = len(IH) // len(H)
    ef = len(DH) // len(H)
    g = len(units(n)) // len(DH)
    places = tuple(FinitePlace(k, p, c, e, ef // e) for c in cosets(DH, n))
    return Splitting(e, ef // e, g, places)


def place_containing(k, p, t):
    """The place above p whose coset contains the exponent t."""
    t %= k.n
    for v in splitting_type(k, p).places:
        if t in v.coset:
            return v
    raise ValueError(f"{t} is not a unit modulo {k.n}")


# ---------------------------------------------------------------------------
# p-adic contexts


@lru_cache(maxsize=None)
def _reference_factor(n, p):
    """Smallest irreducible factor of Phi_n mod p (all have degree ord_n(p))."""
    f = multiplicative_order(p, n)
    phi_mod = padic.pmod(list(cyclotomic_polynomial(n)), p)
    return tuple(padic.equal_degree_factorization(phi_mod, f, p)[0])


@dataclass(frozen=True)
class PadicContext:
    """(Z/p^s)[T]/(G), G a Hensel lift of a factor of Phi_N mod p.

    T is a root of Phi_N modulo p^s.  The place with coset representative t
    is realised by the embedding zeta_N -> T^(t^-1).
    """

    place: FinitePlace
    precision: int
    factor: tuple
    residue_factor: tuple
    root: tuple

    @property
    def modulus(self):
        return self.place.p ** self.precision

    @property
    def ambient_degree(self):
        return len(self.residue_factor) - 1

    def mul(self, a, b):
        return padic.mulmod(a, b, list(self.factor), self.modulus)

    def evaluate_integral(self, ints):
        """Image of sum ints[j] * zeta^j in the local ring."""
        m = self.modulus
        acc = []
        for c, pw in zip(ints, _root_powers(self)):
            if c:
                acc = padic.add(acc, padic.scale(pw, c, m), m)
        return acc


@lru_cache(maxsize=None)
def _root_powers(ctx):
    phi = totient(ctx.place.field.n)
    out = [[1]]
    for _ in range(phi - 1):
        out.append(ctx.mul(out[-1], list(ctx.root)))
    return tuple(out)


@lru_cache(maxsize=None)
def padic_context(place, s):
    """Local ring at an unramified odd place, to precision p^s."""
    p = place.p
    n = place.field.n
    if p == 2:
        raise UnsupportedPlace("wild place over 2 is not supported")
    if n % p == 0:
        raise UnsupportedPlace(f"{p} divides the conductor {n}; ramified local arithmetic is not supported")
    if s < 1:
        raise ValueError("precision must be positive")
    g0 = list(_reference_factor(n, p))
    G = padic.hensel_lift(list(cyclotomic_polynomial(n)), g0, p, s)
    t_inv = pow(place.representative, -1, n) if n > 1 else 0
    root = padic.powmod([0, 1], t_inv, G, p ** s)
    return PadicContext(place, s, tuple(G), tuple(g0), tuple(root))


# -- residue field F_p[T]/(g0) ----------------------------------------------


def residue_mul(ctx, a, b):
    return padic.mulmod(a, b, list(ctx.residue_factor), ctx.place.p)


def residue_pow(ctx, a, e):
    p = ctx.place.p
    g0 = list(ctx.residue_factor)
    if e < 0:
        a = padic.inverse_mod(a, g0, p)
        e = -e
    return padic.powmod(a, e, g0, p)


def quadratic_character(ctx, u):
    """+1 or -1 on a nonzero element of the residue field of the place."""
    q = ctx.place.p ** ctx.place.f
    r = residue_pow(ctx, list(u), (q - 1) // 2)
    if r == [1]:
        return 1
    if r == [ctx.place.p - 1]:
        return -1
    raise ArithmeticError("residue is not in the residue field of the place")


@lru_cache(maxsize=None)
def _element_data(x, k):
    """(integer coefficients, denominator, valuation bound data) for x in k."""
    ints, den = _ints(x)
    return ints, den, norm(x, k.fixing)


def _ints(x):
    den = lcm(*(c.denominator for c in x.coeffs))
    return tuple(c.numerator * (den // c.denominator) for c in x.coeffs), den


def local_valuation_unit(ctx, x):
    """Valuation v of x at the place and the residue u of x / p^v."""
    place = ctx.place
    k = place.field
    p = place.p
    x = k.element(x)
    if not x:
        raise ZeroElement("zero has no unit part")
    ints, den, nx = _element_data(x, k)
    vden = valuation(den, p)
    d = k.degree
    # v(y) <= v_p(N_{k/Q}(y)) / f with y = den * x integral
    bound = (valuation(nx, p) + d * vden) // place.f
    if ctx.precision <= bound:
        ctx = padic_context(place, bound + 8)
    xi = ctx.evaluate_integral(ints)
    if not xi:
        raise PrecisionExhausted(
            f"image vanished modulo {p}^{ctx.precision} despite valuation bound {bound}"
        )
    vy = min(valuation(c, p) for c in xi if c)
    unit = padic.pmod([c // p ** vy for c in xi], p)
    den_unit = (den // p ** vden) % p
    unit = padic.scale(unit, pow(den_unit, -1, p), p)
    return vy - vden, tuple(unit)


def _context_for(place):
    return padic_context(place, 8)


def local_is_square(place, x):
    """Whether x is a square in the completion of the field at ``place``."""
    ctx = _context_for(place)
    v, u = local_valuation_unit(ctx, x)
    return v % 2 == 0 and quadratic_character(ctx, u) == 1


def hilbert_symbol_finite(a, b, place):
    """Tame Hilbert symbol (a, b) at an odd unramified place."""
    ctx = _context_for(place)
    alpha, u = local_valuation_unit(ctx, a)
    beta, w = local_valuation_unit(ctx, b)
    p = place.p
    val = residue_mul(ctx, residue_pow(ctx, list(u), beta), residue_pow(ctx, list(w), -alpha))
    if (alpha * beta) % 2:
        val = padic.scale(val, p - 1, p)
    return quadratic_character(ctx, val)


def hilbert_symbol_real(a, b, place):
    """Hilbert symbol at a real place: -1 iff a and b are both negative there."""
    if not a or not b:
        raise ZeroElement("Hilbert symbol needs nonzero entries")
    if place.sign(a) < 0 and place.sign(b) < 0:
        return -1
    return 1


def rational_primes_to_check(k, elements):
    """Primes dividing 2, the conductor, or the norms of the given elements."""
    primes = {2} | {p for p, _ in factorize(k.n)}
    for x in elements:
        nx = norm(k.element(x), k.fixing)
        primes |= set(primefactors(nx.numerator)) | set(primefactors(nx.denominator))
    return sorted(primes)
