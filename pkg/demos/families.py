"""
The two worked families
=======================

Run the verification reports for the (2,3,7) algebra and for Gamma_p.
Over Q(sin 2pi/p) the element b_p only sees the cosine subfield, so it is
positive at two real places; the report shows the checks this breaks and
the same data over Q(cos 2pi/p), where they hold.
"""

from arithfuchs.families import verify_elkies, verify_gamma_p

rep = verify_elkies(200)
print(rep.name, "passed" if rep.passed else f"failed: {rep.failures()}")

for p in (5, 7):
    rep = verify_gamma_p(p)
    print(rep.name, "passed" if rep.passed else f"failed: {rep.failures()}")
    print("  signs of b_p:", [(s["embedding"], s["sign"]) for s in rep.details["b_p_signs"]])
    print("  odd periods:", {q: d["verdict"] for q, d in rep.details["odd_periods"].items()})
    desc = rep.details["descended"]
    print("  over the cosine field: Fuchsian", desc["fuchsian"], "| rescaled order closed", desc["rescaled_order_closure"])
