"""
Galois conjugation of invariants
================================

Automorphisms of an abelian field permute its places.  Conjugating the
ramification data of an algebra leaves the period set unchanged.
"""

from arithfuchs.families import elkies
from arithfuchs.galois import act_on_place, orbit, synthetic_ramification, verify_period_invariance
from arithfuchs.invariants import ramification
from arithfuchs.places import splitting_type

data = elkies()
k, sigma = data.field, data.sigma

above_13 = splitting_type(k, 13).places
print("sigma acts above 13:", {v.label: act_on_place(sigma, v).label for v in above_13})
print("orbit:", [v.label for v in orbit(above_13[0], sigma)])

ram = ramification(data.algebra, data.trusted_ram_finite)
inv = verify_period_invariance(data.algebra, ram, sigma)
print("periods:", inv["period_set"], "conjugate:", inv["conjugate_period_set"])

# A hand-picked Ram_f: one full orbit.  Odd size, so it is flagged synthetic.
syn = synthetic_ramification(data.algebra, above_13)
for t in (2, 3):
    out = verify_period_invariance(data.algebra, syn, t)
    print(f"sigma_{t}: periods equal {out['periods_equal']}, Ram_f fixed {out['ram_finite_fixed']}")
