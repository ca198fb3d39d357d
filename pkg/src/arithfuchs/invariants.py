"""Ramification, the Fuchsian condition, quadratic embeddings and periods.

Everything that could hinge on a place where local arithmetic is not
implemented (above 2, or above a prime dividing the conductor) is reported
three-valued instead of guessed.
"""

import enum
from dataclasses import dataclass, field as dc_field

from .cyclo import (
    certified_sign,
    cos_element,
    field_contains,
    identity_exponent,
    sin_element,
    square_root,
    totient,
)
from .places import (
    UnsupportedPlace,
    archimedean_places,
    hilbert_symbol_finite,
    hilbert_symbol_real,
    local_is_square,
    rational_primes_to_check,
    splitting_type,
)
from .quat import find_sqrt_witness


class Verdict(str, enum.Enum):
    YES = "yes"
    NO = "no"
    UNDETERMINED = "undetermined"

    def __str__(self):
        return self.value


class NotQuadratic(ValueError):
    pass


class ParityViolation(ArithmeticError):
    pass


class InconsistentTrustedData(ValueError):
    pass


COMPUTED = "computed"
TRUSTED = "trusted"
PARITY = "resolved-by-parity"
UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class RamificationData:
    """Ram_inf and Ram_f of an algebra, with per-place provenance.

    ``provenance`` maps every finite candidate place to one of computed,
    trusted, resolved-by-parity or undetermined.  ``synthetic`` data (place
    sets chosen by hand rather than computed from an algebra) skip the
    parity assertion.
    """

    algebra: object
    ram_infinite: tuple
    ram_finite: frozenset
    undetermined: frozenset = frozenset()
    provenance: dict = dc_field(default_factory=dict, compare=False, hash=False)
    synthetic: bool = False

    def __post_init__(self):
        if self.ram_finite & self.undetermined:
            raise ValueError("a place cannot be both ramified and undetermined")
        if not self.synthetic and not self.undetermined and self.cardinality % 2:
            raise ParityViolation(
                f"|Ram| = {self.cardinality} is odd: "
                + ", ".join(v.label for v in self.sorted_places()))

    @property
    def field(self):
        return self.algebra.field

    @property
    def cardinality(self):
        return len(self.ram_infinite) + len(self.ram_finite)

    @property
    def complete(self):
        return not self.undetermined

    def sorted_places(self):
        return [v for v in self.ram_infinite] + sorted(self.ram_finite)

    def as_dict(self):
        return {
            "ram_infinite": [v.label for v in self.ram_infinite],
            "ram_finite": [v.label for v in sorted(self.ram_finite)],
            "undetermined": [v.label for v in sorted(self.undetermined)],
            "provenance": {v.label: self.provenance[v] for v in sorted(self.provenance)},
            "complete": self.complete,
            "synthetic": self.synthetic,
        }


def ram_infinity(A):
    """Real places where (a, b) is -1, identity place first."""
    return tuple(v for v in archimedean_places(A.field) if hilbert_symbol_real(A.a, A.b, v) == -1)


def _finite_candidates(A):
    k = A.field
    for p in rational_primes_to_check(k, (A.a, A.b)):
        yield from splitting_type(k, p).places


def ram_finite(A, ram_inf=None):
    """(ramified, undetermined, provenance) over the finite places.

    Tame candidate places are decided by the Hilbert symbol; the rest stay
    undetermined unless exactly one is left, in which case parity decides.
    """
    if ram_inf is None:
        ram_inf = ram_infinity(A)
    ramified, undetermined, provenance = set(), set(), {}
    for v in _finite_candidates(A):
        if v.tame:
            provenance[v] = COMPUTED
            if hilbert_symbol_finite(A.a, A.b, v) == -1:
                ramified.add(v)
        else:
            provenance[v] = UNDETERMINED
            undetermined.add(v)
    if len(undetermined) == 1:
        (v,) = undetermined
        undetermined.clear()
        provenance[v] = PARITY
        if (len(ram_inf) + len(ramified)) % 2:
            ramified.add(v)
    return frozenset(ramified), frozenset(undetermined), provenance


def ramification(A, trusted_finite=None):
    """RamificationData for A.

    ``trusted_finite`` is an externally known complete Ram_f (a set of
    FinitePlace).  It settles undetermined places; where a place was also
    computed the two must agree.
    """
    ram_inf = ram_infinity(A)
    ramified, undetermined, provenance = ram_finite(A, ram_inf)
    if trusted_finite is not None:
        trusted = frozenset(trusted_finite)
        for v in trusted:
            if v not in provenance:
                raise InconsistentTrustedData(
                    f"{v.label} cannot ramify: it divides neither 2, the conductor nor the norms of a, b")
        for v, how in list(provenance.items()):
            if how == COMPUTED:
                if (v in ramified) != (v in trusted):
                    raise InconsistentTrustedData(f"trusted data disagrees with the computed symbol at {v.label}")
            elif how == UNDETERMINED:
                provenance[v] = TRUSTED
            elif how == PARITY and (v in ramified) != (v in trusted):
                raise InconsistentTrustedData(f"trusted data breaks parity at {v.label}")
        ramified = frozenset(v for v in provenance if v in trusted or (v in ramified and provenance[v] != TRUSTED))
        undetermined = frozenset()
    return RamificationData(A, ram_inf, ramified, undetermined, provenance)


def fuchsian_check(A, ram_inf=None):
    """True iff A is ramified at every real place except the identity one."""
    if ram_inf is None:
        ram_inf = ram_infinity(A)
    places = archimedean_places(A.field)
    return set(v.representative for v in ram_inf) == set(v.representative for v in places[1:])


# ---------------------------------------------------------------------------
# quadratic embeddings


@dataclass
class PlaceOutcome:
    label: str
    ramification: str  # provenance of the place's status
    outcome: str  # "non-split", "split" or "unknown"

    def as_dict(self):
        return {"place": self.label, "status": self.ramification, "outcome": self.outcome}


def _is_global_square(k, c):
    if certified_sign(c, identity_exponent(k.n)) < 0:
        return False
    try:
        return square_root(c, k) is not None
    except NotImplementedError:
        return False


def bhn_embeds(A, c, ram):
    """Whether k(sqrt c) embeds in A: every ramified place must be non-split.

    Returns (Verdict, [PlaceOutcome]).
    """
    k = A.field
    c = k.element(c)
    if not c:
        raise ValueError("c must be nonzero")
    if _is_global_square(k, c):
        raise NotQuadratic("c is a square in k, so k(sqrt c) is not a quadratic extension")
    trace = []
    failed = unknown = False
    for v in ram.ram_infinite:
        ok = v.sign(c) < 0
        trace.append(PlaceOutcome(v.label, COMPUTED, "non-split" if ok else "split"))
        failed |= not ok
    for v in sorted(ram.ram_finite):
        status = ram.provenance.get(v, TRUSTED)
        try:
            ok = not local_is_square(v, c)
        except UnsupportedPlace:
            trace.append(PlaceOutcome(v.label, status, "unknown"))
            unknown = True
            continue
        trace.append(PlaceOutcome(v.label, status, "non-split" if ok else "split"))
        failed |= not ok
    for v in sorted(ram.undetermined):
        # only matters if it ramifies and c is a local square there
        try:
            square = local_is_square(v, c)
        except UnsupportedPlace:
            square = None
        if square is False:
            trace.append(PlaceOutcome(v.label, UNDETERMINED, "non-split"))
        else:
            trace.append(PlaceOutcome(v.label, UNDETERMINED, "unknown"))
            unknown = True
    if failed:
        return Verdict.NO, trace
    if unknown:
        return Verdict.UNDETERMINED, trace
    return Verdict.YES, trace


# ---------------------------------------------------------------------------
# periods


def cos_in_field(k, m):
    """Whether cos(2 pi / m) lies in k, with a conductor shortcut."""
    if m < 1:
        raise ValueError("m must be positive")
    m_star = m if m % 2 or m % 4 == 0 else m // 2
    if m_star in (1, 3, 4):
        return True
    if k.n % m_star:
        return False
    return field_contains(k, cos_element(1, m))


def minus_sin_squared(m):
    """-sin^2(2 pi / m) = (cos(4 pi / m) - 1) / 2, at conductor dividing m."""
    return (cos_element(2, m) - 1) / 2


@dataclass
class PeriodReport:
    m: int
    in_period_set: Verdict
    subfield_ok: bool
    bhn: Verdict = None
    local_results: list = dc_field(default_factory=list)
    witness: object = None
    note: str = ""

    def as_dict(self):
        from .cyclo import format_element

        return {
            "m": self.m,
            "in_period_set": str(self.in_period_set),
            "subfield_ok": self.subfield_ok,
            "bhn": None if self.bhn is None else str(self.bhn),
            "local_results": [r.as_dict() for r in self.local_results],
            "witness": None if self.witness is None else [format_element(x) for x in self.witness.coords],
            "note": self.note,
        }


def _hints(k, m):
    s = sin_element(1, m)
    return [s] if field_contains(k, s) else []


def period_test(A, m, ram, witness=True):
    """Does the commensurator contain an element of order m?"""
    if m < 1:
        raise ValueError("m must be positive")
    k = A.field
    if m <= 2:
        return PeriodReport(m, Verdict.YES, True, note="orders 1 and 2 always occur")
    if not cos_in_field(k, m):
        return PeriodReport(m, Verdict.NO, False, note="cos(2 pi/m) is not in k")
    c = minus_sin_squared(m)
    verdict, trace = bhn_embeds(A, c, ram)
    report = PeriodReport(m, verdict, True, verdict, trace)
    if witness:
        x = find_sqrt_witness(A, c, hints=_hints(k, m))
        if x is not None:
            report.witness = x
            if verdict is Verdict.NO:
                raise ArithmeticError(
                    f"witness for m = {m} contradicts the local test; check the trusted ramification data")
            if verdict is Verdict.UNDETERMINED:
                report.in_period_set = Verdict.YES
                report.note = "settled by an explicit witness"
    return report


def period_test_odd(A, m, ram):
    """Odd m only: subfield via cos(4 pi/m), then the same embedding test."""
    if m % 2 == 0 or m < 3:
        raise ValueError("m must be odd and at least 3")
    c = minus_sin_squared(m)
    if not field_contains(A.field, c):
        return Verdict.NO
    return bhn_embeds(A, c, ram)[0]


def period_bound(k):
    return 8 * k.degree ** 2


@dataclass
class PeriodSet:
    members: frozenset
    undetermined: frozenset
    bound: int
    reports: dict

    def as_dict(self):
        return {
            "members": sorted(self.members),
            "undetermined": sorted(self.undetermined),
            "bound": self.bound,
            "reports": [self.reports[m].as_dict() for m in sorted(self.reports)],
        }


def period_set(A, ram, bound=None, witness=True):
    """All m <= bound (default 8 d^2) with period_test yes, plus undetermined m."""
    k = A.field
    if bound is None:
        bound = period_bound(k)
    members, undetermined, reports = set(), set(), {}
    for m in range(1, bound + 1):
        if m > 2 and totient(m) > 2 * k.degree:
            continue
        r = period_test(A, m, ram, witness=witness)
        if r.subfield_ok:
            reports[m] = r
        if r.in_period_set is Verdict.YES:
            members.add(m)
        elif r.in_period_set is Verdict.UNDETERMINED:
            undetermined.add(m)
    return PeriodSet(frozenset(members), frozenset(undetermined), bound, reports)
