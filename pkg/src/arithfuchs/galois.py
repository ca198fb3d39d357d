"""Galois action on places and on algebra invariant data.

All fields here are abelian, hence normal: an automorphism maps k to
itself and only permutes places and real embeddings.  A genuinely moving
field k -> k^sigma (non-normal k) cannot be represented.
"""

from dataclasses import dataclass

from .cyclo import GaloisAutomorphism
from .invariants import RamificationData, period_set, period_test_odd, period_bound
from .places import ArchimedeanPlace, archimedean_places, splitting_type

NORMALITY_NOTE = "fields are abelian, so k^sigma = k and conjugation only permutes places"


class FieldMismatch(ValueError):
    pass


def _exponent(sigma, n):
    if isinstance(sigma, int):
        return sigma % n
    return sigma.exponent_mod(n)


def act_on_place(sigma, v):
    """sigma(v): multiply the place's coset by sigma's exponent."""
    k = v.field
    t = _exponent(sigma, k.n)
    if isinstance(v, ArchimedeanPlace):
        # sign of sigma(x) at sigma(v) equals sign of x at v
        rep = v.representative * pow(t, -1, k.n) % k.n if k.n > 1 else 0
        for w in archimedean_places(k):
            if rep in _arch_coset(k, w):
                return w
        raise ValueError("no image place")  # pragma: no cover
    target = frozenset(u * t % k.n for u in v.coset)
    for w in splitting_type(k, v.p).places:
        if w.coset == target:
            return w
    raise ValueError(f"no place above {v.p} with coset {sorted(target)}")  # pragma: no cover


def _arch_coset(k, v):
    return frozenset(v.representative * h % k.n for h in k.fixing)


def orbit(v, sigma):
    """Orbit of a place under the cyclic group generated by sigma."""
    out = [v]
    w = act_on_place(sigma, v)
    while w != v:
        out.append(w)
        w = act_on_place(sigma, w)
    return out


@dataclass(frozen=True)
class AlgebraInvariantData:
    """The data (k, Ram_f, unramified at the identity) fixing A up to isomorphism."""

    field: object
    ram_finite: frozenset
    unramified_identity: bool = True

    @classmethod
    def from_ramification(cls, ram):
        if ram.undetermined:
            raise ValueError("ramification data still has undetermined places")
        one = min(v.representative for v in archimedean_places(ram.field)[:1])
        unram = all(v.representative != one for v in ram.ram_infinite)
        return cls(ram.field, ram.ram_finite, unram)

    def as_dict(self):
        return {
            "ram_finite": [v.label for v in sorted(self.ram_finite)],
            "unramified_identity": self.unramified_identity,
        }


def conjugate_invariants(D, sigma):
    return AlgebraInvariantData(
        D.field, frozenset(act_on_place(sigma, v) for v in D.ram_finite), D.unramified_identity)


def same_algebra(D1, D2):
    if D1.field != D2.field:
        raise FieldMismatch("invariant data live over different fields")
    return D1.ram_finite == D2.ram_finite and D1.unramified_identity == D2.unramified_identity


def conjugate_ramification(ram, sigma):
    """Ramification data with every finite place moved by sigma.

    The real places are kept: for Fuchsian data the conjugate algebra is,
    by construction, again ramified at all but the identity embedding.
    """
    moved = {act_on_place(sigma, v): how for v, how in ram.provenance.items()}
    return RamificationData(
        ram.algebra,
        ram.ram_infinite,
        frozenset(act_on_place(sigma, v) for v in ram.ram_finite),
        frozenset(act_on_place(sigma, v) for v in ram.undetermined),
        moved,
        synthetic=ram.synthetic,
    )


def synthetic_ramification(A, finite_places, ram_infinite=None):
    """Hand-picked ramification data (no parity assertion)."""
    from .invariants import ram_infinity

    if ram_infinite is None:
        ram_infinite = ram_infinity(A)
    places = frozenset(finite_places)
    return RamificationData(A, tuple(ram_infinite), places, frozenset(),
                            {v: "synthetic" for v in places}, synthetic=True)


def verify_period_invariance(A, ram, sigma, bound=None):
    """Compare period data for ram and its conjugate under sigma.

    Witness searches are skipped on both sides so the comparison only sees
    the (k, Ram) data.  Also compares the odd-m equation route.
    """
    if isinstance(sigma, int):
        sigma = GaloisAutomorphism(A.field.n, sigma)
    conj = conjugate_ramification(ram, sigma)
    if bound is None:
        bound = period_bound(A.field)
    before = period_set(A, ram, bound, witness=False)
    after = period_set(A, conj, bound, witness=False)
    odd_before, odd_after = {}, {}
    for m in range(3, bound + 1, 2):
        if m not in before.reports:
            continue
        odd_before[m] = str(period_test_odd(A, m, ram))
        odd_after[m] = str(period_test_odd(A, m, conj))
    D = AlgebraInvariantData(A.field, ram.ram_finite)
    return {
        "sigma": sigma.exponent_mod(A.field.n),
        "period_set": sorted(before.members),
        "period_set_undetermined": sorted(before.undetermined),
        "conjugate_period_set": sorted(after.members),
        "conjugate_period_set_undetermined": sorted(after.undetermined),
        "periods_equal": before.members == after.members and before.undetermined == after.undetermined,
        "odd_equations": {str(m): odd_before[m] for m in sorted(odd_before)},
        "odd_equations_equal": odd_before == odd_after,
        "ram_finite_fixed": same_algebra(D, conjugate_invariants(D, sigma)),
        "note": NORMALITY_NOTE,
    }
