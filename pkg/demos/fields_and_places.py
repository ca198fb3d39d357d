"""
Abelian fields and their places
===============================

Exact arithmetic in Q(zeta_7)^+, certified signs at the real places and
the splitting of rational primes.
"""

from arithfuchs.cyclo import AbelianField, approx, certified_sign, cos_element, minimal_polynomial
from arithfuchs.places import archimedean_places, splitting_type

# The real cyclotomic field of conductor 7 is cubic.
k = AbelianField.real_cyclotomic(7)
c = 2 * cos_element(1, 7)
print(k.describe())
print("minimal polynomial of 2cos(2pi/7), constant term first:", [str(a) for a in minimal_polynomial(c)])

# Every real place is a coset of the fixing subgroup {1, 6}.
for v in archimedean_places(k):
    print(v.label, "c ~", round(approx(c, v.representative), 6), "sign", certified_sign(c, v.representative))

# A prime splits into three places exactly when p = +-1 mod 7; 7 itself is
# totally ramified and 2 is inert.
for p in (2, 3, 7, 13, 29, 43):
    e, f, g, places = splitting_type(k, p)
    print(f"p={p:2d}  e={e} f={f} g={g}  ", " ".join(v.label for v in places))
