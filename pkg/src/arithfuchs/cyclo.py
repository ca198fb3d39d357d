"""Exact arithmetic in cyclotomic fields Q(zeta_N) and their subfields.

An element of Q(zeta_N) is stored as the rational coefficient vector of its
unique representative of degree < phi(N) modulo the N-th cyclotomic
polynomial.  Subfields are described Galois-theoretically: the subfield of
Q(zeta_N) fixed by a subgroup H of (Z/NZ)*, where t acts by zeta -> zeta^t.
"""

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

import mpmath

from .linalg import LeftInverse, SingularMatrix


class NotRealAtEmbedding(ValueError):
    pass


class NotABasis(ValueError):
    pass


class NotInField(ValueError):
    pass


# ---------------------------------------------------------------------------
# integer helpers


@lru_cache(maxsize=None)
def factorize(n):
    """Trial-division factorisation, fine for conductors and orders."""
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return tuple(sorted(out.items()))


def totient(n):
    r = n
    for p, _ in factorize(n):
        r = r // p * (p - 1)
    return r


def mobius(n):
    fs = factorize(n)
    if any(e > 1 for _, e in fs):
        return 0
    return -1 if len(fs) % 2 else 1


@lru_cache(maxsize=None)
def units(n):
    """(Z/nZ)* as a sorted tuple; for n = 1 this is ``(0,)``."""
    return tuple(t for t in range(n) if gcd(t, n) == 1)


def identity_exponent(n):
    return 1 % n


def multiplicative_order(t, n):
    if n == 1:
        return 1
    k, x = 1, t % n
    while x != 1:
        x = x * t % n
        k += 1
    return k


# ---------------------------------------------------------------------------
# subgroups of (Z/nZ)*


def generated_subgroup(gens, n):
    H = {identity_exponent(n)}
    frontier = list(H)
    gens = [g % n for g in gens]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = x * g % n
            if y not in H:
                H.add(y)
                frontier.append(y)
    return frozenset(H)


def subgroup_generators(H, n):
    """A small generating set of the subgroup ``H``."""
    gens = []
    span = frozenset({identity_exponent(n)})
    for t in sorted(H):
        if t not in span:
            gens.append(t)
            span = generated_subgroup(gens, n)
            if len(span) == len(H):
                break
    return tuple(gens)


def lift_subgroup(H, n, m):
    """Full preimage of ``H`` under reduction (Z/mZ)* -> (Z/nZ)*, n | m."""
    if m % n:
        raise ValueError(f"{n} does not divide {m}")
    return frozenset(t for t in units(m) if t % n in H)


def lift_exponent(t, n, m):
    """Smallest unit mod m that is congruent to t mod n (n | m)."""
    if m % n:
        raise ValueError(f"{n} does not divide {m}")
    t %= n
    for s in range(t, m + n, n):
        if gcd(s, m) == 1:
            return s % m
    raise ValueError("no lift")  # pragma: no cover


def cosets(H, n):
    """Cosets of ``H`` in (Z/nZ)*, identity coset first, then by least element."""
    seen = set()
    out = []
    for t in units(n):
        if t in seen:
            continue
        c = frozenset(t * h % n for h in H)
        seen |= c
        out.append(c)
    one = identity_exponent(n)
    out.sort(key=lambda c: (one not in c, min(c)))
    return out


# ---------------------------------------------------------------------------
# cyclotomic polynomials and the power table


def _poly_divexact(num, den):
    """Exact division of integer polynomials (low-to-high), den monic."""
    num = list(num)
    dq = len(den) - 1
    q = [0] * (len(num) - dq)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + dq]
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[:dq]):
        raise ArithmeticError("inexact division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Integer coefficients of Phi_n, low degree first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(n):
    """Row e holds zeta_n^e reduced mod Phi_n as sparse ``((j, c), ...)``."""
    phi = totient(n)
    cp = cyclotomic_polynomial(n)
    rows = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple((j, c) for j, c in enumerate(cur) if c))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(phi):
                cur[j] -= top * cp[j]
    return tuple(rows)


@lru_cache(maxsize=None)
def _trace_weights(n):
    """Normalised trace Tr(zeta^j)/phi(n) for j < phi(n)."""
    out = []
    for j in range(totient(n)):
        g = gcd(j, n)
        out.append(Fraction(mobius(n // g), totient(n // g)))
    return tuple(out)


def _reduce_int(n, dense):
    """Reduce an integer coefficient list (any length) mod Phi_n."""
    phi = totient(n)
    table = _power_table(n)
    out = list(dense[:phi]) + [0] * max(0, phi - len(dense))
    for e in range(phi, len(dense)):
        c = dense[e]
        if c:
            for j, r in table[e % n]:
                out[j] += c * r
    return out


def _to_ints(coeffs):
    den = lcm(*(c.denominator for c in coeffs))
    return [c.numerator * (den // c.denominator) for c in coeffs], den


# ---------------------------------------------------------------------------
# elements


class CycloElement:
    """An element of Q(zeta_n) in the reduced power basis."""

    __slots__ = ("n", "coeffs", "_hash")

    def __init__(self, n, coeffs):
        phi = totient(n)
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != phi:
            raise ValueError(f"need {phi} coefficients for conductor {n}, got {len(coeffs)}")
        self.n = n
        self.coeffs = coeffs
        self._hash = None

    @classmethod
    def _raw(cls, n, coeffs):
        obj = object.__new__(cls)
        obj.n = n
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def from_exponents(cls, n, terms):
        """Build sum c * zeta_n^e from a mapping ``{e: c}`` with arbitrary e."""
        phi = totient(n)
        table = _power_table(n)
        out = [Fraction(0)] * phi
        for e, c in terms.items():
            for j, r in table[e % n]:
                out[j] += c * r
        return cls._raw(n, tuple(out))

    @classmethod
    def rational(cls, q, n=1):
        phi = totient(n)
        return cls._raw(n, (Fraction(q),) + (Fraction(0),) * (phi - 1))

    # -- basic predicates -------------------------------------------------
    def is_rational(self):
        return not any(self.coeffs[1:])

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0]

    def __bool__(self):
        return any(self.coeffs)

    def lift(self, m):
        """Same number viewed in Q(zeta_m); requires n | m."""
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError(f"cannot lift conductor {self.n} to {m}")
        step = m // self.n
        return CycloElement.from_exponents(
            m, {j * step: c for j, c in enumerate(self.coeffs) if c}
        )

    def normalized_trace(self):
        return sum((c * w for c, w in zip(self.coeffs, _trace_weights(self.n)) if c), Fraction(0))

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, CycloElement):
            return other
        if isinstance(other, (int, Fraction)):
            return CycloElement.rational(other)
        return NotImplemented

    def _common(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented, NotImplemented
        if other.n == self.n:
            return self, other
        if other.n == 1:
            return self, other.lift(self.n)
        if self.n == 1:
            return self.lift(other.n), other
        m = lcm(self.n, other.n)
        return self.lift(m), other.lift(m)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloElement._raw(self.n, (self.coeffs[0] + other,) + self.coeffs[1:])
        a, b = self._common(other)
        if a is NotImplemented:
            return NotImplemented
        return CycloElement._raw(a.n, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloElement._raw(self.n, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self + (-other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloElement._raw(self.n, tuple(x * other for x in self.coeffs))
        a, b = self._common(other)
        if a is NotImplemented:
            return NotImplemented
        if b.is_rational():
            return a * b.coeffs[0]
        if a.is_rational():
            return b * a.coeffs[0]
        ai, ad = _to_ints(a.coeffs)
        bi, bd = _to_ints(b.coeffs)
        prod = [0] * (len(ai) + len(bi) - 1)
        for i, x in enumerate(ai):
            if x:
                for j, y in enumerate(bi):
                    if y:
                        prod[i + j] += x * y
        red = _reduce_int(a.n, prod)
        den = ad * bd
        return CycloElement._raw(a.n, tuple(Fraction(c, den) for c in red))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(zeta_n)")
        return _inverse(self)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("division by zero in Q(zeta_n)")
        if other.is_rational():
            return self * (1 / other.coeffs[0])
        a, b = self._common(other)
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloElement.rational(1, self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CycloElement):
            return NotImplemented
        if self.n == other.n:
            return self.coeffs == other.coeffs
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.normalized_trace())
        return self._hash

    def __repr__(self):
        return f"CycloElement({format_element(self)})"


@lru_cache(maxsize=4096)
def _inverse(x):
    """Inverse via the extended Euclidean algorithm against Phi_n."""
    n = x.n
    phi = totient(n)
    if phi == 1:
        return CycloElement._raw(n, (1 / x.coeffs[0],))
    # polynomials over Q, low-to-high, trimmed
    r0 = [Fraction(c) for c in cyclotomic_polynomial(n)]
    r1 = _trim(list(x.coeffs))
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while len(r1) > 1 or r1[0] == 0:
        q, r = _qdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _trim(_qsub(s0, _qmul(q, s1)))
    # r1 is a nonzero constant: s1 * x == r1 (mod Phi_n)
    c = r1[0]
    out = [v / c for v in s1] + [Fraction(0)] * (phi - len(s1))
    return CycloElement._raw(n, tuple(out[:phi]))


def _trim(p):
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _qmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _qsub(a, b):
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _qdivmod(a, b):
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    q = [Fraction(0)] * max(1, len(a) - db)
    for i in range(len(a) - 1 - db, -1, -1):
        c = a[i + db] / lead
        q[i] = c
        if c:
            for j, y in enumerate(b):
                a[i + j] -= c * y
    return q, _trim(a[:db] if db else [Fraction(0)])


# ---------------------------------------------------------------------------
# constructors


def rational(q):
    return CycloElement.rational(Fraction(q))


def zeta(n, k=1):
    return CycloElement.from_exponents(n, {k: Fraction(1)})


def cos_element(numer, denom):
    """cos(2*pi*numer/denom) in Q(zeta_M), M the reduced denominator."""
    if denom < 1:
        raise ValueError("denominator must be positive")
    q = Fraction(numer, denom)
    m = q.denominator
    e = q.numerator % m
    terms = {e: Fraction(1, 2)}
    terms[(-e) % m] = terms.get((-e) % m, 0) + Fraction(1, 2)
    return CycloElement.from_exponents(m, terms)


def sin_element(numer, denom):
    """sin(2*pi*numer/denom), computed as cos(2*pi*(denom - 4*numer)/(4*denom))."""
    return cos_element(denom - 4 * numer, 4 * denom)


# ---------------------------------------------------------------------------
# Galois action


def galois_apply(t, x):
    """Apply zeta_n -> zeta_n^t to ``x``."""
    n = x.n
    t %= n
    if gcd(t, n) != 1:
        raise ValueError(f"{t} is not a unit modulo {n}")
    if t == identity_exponent(n):
        return x
    return CycloElement.from_exponents(n, {j * t: c for j, c in enumerate(x.coeffs) if c})


@dataclass(frozen=True)
class GaloisAutomorphism:
    """zeta_n -> zeta_n^t on Q(zeta_n), acting on anything it can be lifted to."""

    n: int
    t: int

    def __post_init__(self):
        if gcd(self.t, self.n) != 1:
            raise ValueError(f"{self.t} is not a unit modulo {self.n}")
        object.__setattr__(self, "t", self.t % self.n)

    def exponent_mod(self, m):
        """The exponent acting on Q(zeta_m); needs n | m or m | n."""
        if self.n % m == 0:
            return self.t % m
        return lift_exponent(self.t, self.n, m)

    def __call__(self, x):
        return galois_apply(self.exponent_mod(x.n), x)

    def compose(self, other):
        m = lcm(self.n, other.n)
        return GaloisAutomorphism(m, self.exponent_mod(m) * other.exponent_mod(m) % m)


def stabilizer(x):
    """Subgroup of (Z/nZ)* fixing ``x``."""
    return frozenset(t for t in units(x.n) if galois_apply(t, x) == x)


def conjugates(x, H=None):
    """One Galois conjugate per coset of ``H`` (default: the stabilizer of x)."""
    if H is None:
        H = stabilizer(x)
    return [galois_apply(min(c), x) for c in cosets(H, x.n)]


def minimal_polynomial(x):
    """Monic minimal polynomial over Q, as Fractions low degree first."""
    poly = [CycloElement.rational(1, x.n)]
    for y in conjugates(x):
        # multiply by (T - y)
        new = [None] * (len(poly) + 1)
        new[len(poly)] = poly[-1]
        for i in range(len(poly) - 1, 0, -1):
            new[i] = poly[i - 1] - y * poly[i]
        new[0] = -(y * poly[0])
        poly = new
    out = []
    for c in poly:
        if not c.is_rational():
            raise ArithmeticError("orbit product is not rational")
        out.append(c.coeffs[0])
    return tuple(out)


def evaluate_polynomial(coeffs, x):
    acc = CycloElement.rational(0, x.n)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


@lru_cache(maxsize=4096)
def norm(x, H=None):
    """Norm from the fixed field of ``H`` (default: all of Q(zeta_n)) to Q.

    ``x`` must be fixed by ``H``.
    """
    if H is None:
        H = frozenset({identity_exponent(x.n)})
    acc = CycloElement.rational(1, x.n)
    for y in conjugates(x, H):
        acc = acc * y
    return acc.to_fraction()


# ---------------------------------------------------------------------------
# certified real signs


def _initial_bits():
    return max(64, int(os.environ.get("AFG_PRECISION_BITS", "64")))


def interval_value(x, t, bits):
    """Interval enclosure of the (real) image of x under zeta -> exp(2 pi i t/n)."""
    iv = mpmath.iv
    old = iv.prec
    iv.prec = bits
    try:
        acc = iv.mpf(0)
        n = x.n
        for j, c in enumerate(x.coeffs):
            if c:
                angle = 2 * iv.pi * iv.mpf((t * j) % n) / n
                acc += iv.mpf(c.numerator) / c.denominator * iv.cos(angle)
        return acc
    finally:
        iv.prec = old


def _endpoints(v):
    return mpmath.mpf(v._mpi_[0]), mpmath.mpf(v._mpi_[1])


def certified_sign(x, t=1):
    """Sign (-1, 0, 1) of the real number x^t, certified by interval arithmetic."""
    n = x.n
    t %= n
    if gcd(t, n) != 1:
        raise ValueError(f"{t} is not a unit modulo {n}")
    y = galois_apply(t, x)
    if galois_apply(-1, y) != y:
        raise NotRealAtEmbedding(f"image under {t} is not real")
    if not y:
        return 0
    bits = _initial_bits()
    while True:
        lo, hi = _endpoints(interval_value(x, t, bits))
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        bits *= 2


def approx(x, t=1, digits=15):
    """Float approximation of a real image (for display only)."""
    lo, hi = _endpoints(interval_value(x, t % x.n, 4 * digits + 64))
    return float((lo + hi) / 2)


# ---------------------------------------------------------------------------
# abelian fields


@dataclass(frozen=True)
class AbelianField:
    """Fixed field of ``fixing`` inside Q(zeta_n)."""

    n: int
    fixing: frozenset

    def __post_init__(self):
        H = frozenset(t % self.n for t in self.fixing)
        if identity_exponent(self.n) not in H:
            H = H | {identity_exponent(self.n)}
        closed = generated_subgroup(H, self.n)
        if closed != H:
            raise ValueError("fixing set is not a subgroup of (Z/nZ)*")
        object.__setattr__(self, "fixing", H)

    @classmethod
    def rationals(cls):
        return cls(1, frozenset({0}))

    @classmethod
    def generated_by(cls, x):
        return cls(x.n, stabilizer(x))

    @classmethod
    def real_cyclotomic(cls, n):
        return cls(n, frozenset({1 % n, (-1) % n}))

    @property
    def degree(self):
        return len(units(self.n)) // len(self.fixing)

    def is_totally_real(self):
        return (-1) % self.n in self.fixing

    def contains(self, x):
        return field_contains(self, x)

    def element(self, x):
        """``x`` as an element of this field, lifted to conductor n."""
        if isinstance(x, (int, Fraction)):
            return CycloElement.rational(x, self.n)
        m = lcm(self.n, x.n)
        if m != self.n:
            if not field_contains(self, x):
                raise NotInField(f"{format_element(x)} is not in the field")
            # x lies in Q(zeta_n) too; recover its conductor-n form by
            # solving in the lifted basis
            return _descend(x, self.n)
        x = x.lift(self.n)
        if not all(galois_apply(g, x) == x for g in subgroup_generators(self.fixing, self.n)):
            raise NotInField(f"{format_element(x)} is not in the field")
        return x

    def generators_text(self):
        return list(subgroup_generators(self.fixing, self.n))

    def describe(self):
        return {
            "conductor": self.n,
            "fixing_subgroup_generators": self.generators_text(),
            "fixing_subgroup_order": len(self.fixing),
            "degree": self.degree,
            "totally_real": self.is_totally_real(),
        }


def _descend(x, n):
    """Rewrite x (known to lie in Q(zeta_n)) with conductor n."""
    m = lcm(x.n, n)
    xl = x.lift(m)
    basis = [zeta(n, j).lift(m).coeffs for j in range(totient(n))]
    cols = [list(r) for r in zip(*basis)]
    sol = LeftInverse(cols).solve(list(xl.coeffs))
    if sol is None:
        raise NotInField("element does not lie in the target cyclotomic field")
    return CycloElement._raw(n, tuple(sol))


def field_contains(k, x):
    """Whether ``x`` lies in the abelian field ``k``."""
    if isinstance(x, (int, Fraction)) or x.is_rational():
        return True
    m = lcm(k.n, x.n)
    xl = x.lift(m)
    H = lift_subgroup(k.fixing, k.n, m) if m != k.n else k.fixing
    return all(galois_apply(g, xl) == xl for g in subgroup_generators(H, m))


# ---------------------------------------------------------------------------
# integrality in a power basis


@lru_cache(maxsize=256)
def _power_basis_solver(g):
    d = len(units(g.n)) // len(stabilizer(g))
    powers = [CycloElement.rational(1, g.n)]
    for _ in range(d - 1):
        powers.append(powers[-1] * g)
    cols = [list(r) for r in zip(*(p.coeffs for p in powers))]
    try:
        return LeftInverse(cols)
    except SingularMatrix as exc:  # pragma: no cover - d is the true degree
        raise NotABasis(str(exc)) from exc


def power_basis_coordinates(x, generator):
    """Rational coordinates of x in 1, g, ..., g^(d-1), d = [Q(g):Q]."""
    m = lcm(x.n, generator.n)
    g = generator.lift(m)
    x = x.lift(m)
    sol = _power_basis_solver(g).solve(list(x.coeffs))
    if sol is None:
        raise NotInField(f"{format_element(x)} is not in Q(generator)")
    return sol


def is_integral(x, generator, degree=None):
    """Integer coordinates of x in the power basis of ``generator``, or None.

    ``degree`` is the degree of the field the caller expects the generator to
    generate; a generator of smaller degree raises ``NotABasis``.
    """
    if degree is not None:
        d = len(units(generator.n)) // len(stabilizer(generator))
        if d != degree:
            raise NotABasis(f"generator has degree {d}, field has degree {degree}")
    coords = power_basis_coordinates(x, generator)
    if all(c.denominator == 1 for c in coords):
        return [int(c) for c in coords]
    return None


# ---------------------------------------------------------------------------
# serialisation: "[N; q0, q1, ...]"


def format_element(x):
    return f"[{x.n}; " + ", ".join(str(c) for c in x.coeffs) + "]"


def parse_element_text(text):
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"not a serialised element: {text!r}")
    head, _, tail = body[1:-1].partition(";")
    n = int(head)
    coeffs = [Fraction(s.strip()) for s in tail.split(",")] if tail.strip() else []
    return CycloElement(n, coeffs)


# ---------------------------------------------------------------------------
# primitive elements and square roots


@lru_cache(maxsize=None)
def primitive_element(k):
    """An algebraic integer generating the abelian field ``k``.

    Tries Gaussian periods sum_{h in H} zeta^(j h) first, then small
    integer combinations of two periods.
    """
    if k.degree == 1:
        return CycloElement.rational(1, k.n)
    periods = []
    for c in cosets(k.fixing, k.n):
        j = min(c)
        terms = {}
        for h in k.fixing:
            e = j * h % k.n
            terms[e] = terms.get(e, 0) + 1
        eta = CycloElement.from_exponents(k.n, terms)
        if stabilizer(eta) == k.fixing:
            return eta
        periods.append(eta)
    for a in range(1, 4):
        for x in periods:
            for y in periods:
                z = x + a * y * y
                if stabilizer(z) == k.fixing:
                    return z
    raise ArithmeticError("no primitive element found")  # pragma: no cover


def _rational_sqrt(q):
    from math import isqrt

    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def square_root(y, k, max_degree=12):
    """A square root of y inside the totally real abelian field k, or None.

    The candidate is reconstructed from its real embeddings (one sign choice
    per embedding, identity sign fixed) and accepted only after an exact
    check z*z == y.  Fields of degree above ``max_degree`` are not searched.
    """
    y = k.element(y)
    if y.is_rational():
        r = _rational_sqrt(y.coeffs[0])
        if r is not None:
            return CycloElement.rational(r, k.n)
        if k.degree == 1:
            return None
    if not y:
        return CycloElement.rational(0, k.n)
    if not k.is_totally_real():
        raise NotImplementedError("square roots are only searched in totally real fields")
    reps = [min(c) for c in cosets(k.fixing, k.n)]
    if any(certified_sign(y, t) < 0 for t in reps):
        return None
    d = len(reps)
    if d > max_degree:
        return None
    g = primitive_element(k)
    e = lcm(*(c.denominator for c in y.coeffs))
    with mpmath.workprec(64):
        gv = [approx(g, t) for t in reps]
    disc_est = 1.0
    for i in range(d):
        for j in range(i + 1, d):
            disc_est *= (gv[i] - gv[j]) ** 2
    bits = 128 + int(abs(disc_est)).bit_length() + (e * e).bit_length() + 8 * d
    with mpmath.workprec(bits):
        gval = [_mid(interval_value(g, t, bits)) for t in reps]
        yval = [_mid(interval_value(y, t, bits)) for t in reps]
        disc = mpmath.mpf(1)
        for i in range(d):
            for j in range(i + 1, d):
                disc *= (gval[i] - gval[j]) ** 2
        disc = int(mpmath.nint(disc))
        scale_ = e * disc
        V = mpmath.matrix([[gv_ ** i for i in range(d)] for gv_ in gval])
        Vinv = V ** -1
        roots = [mpmath.sqrt(v) for v in yval]
        basis = [CycloElement.rational(1, k.n)]
        for _ in range(d - 1):
            basis.append(basis[-1] * g)
        for mask in range(1 << (d - 1)):
            w = [roots[0]] + [
                -roots[i] if (mask >> (i - 1)) & 1 else roots[i] for i in range(1, d)
            ]
            coords = []
            ok = True
            for i in range(d):
                s = mpmath.fsum(Vinv[i, j] * w[j] for j in range(d)) * scale_
                r = mpmath.nint(s)
                if abs(s - r) > 0.01:
                    ok = False
                    break
                coords.append(Fraction(int(r), scale_))
            if not ok:
                continue
            z = CycloElement.rational(0, k.n)
            for c_, b_ in zip(coords, basis):
                if c_:
                    z = z + b_ * c_
            if z * z == y:
                return z
    return None


def _mid(v):
    lo, hi = _endpoints(v)
    return (lo + hi) / 2
