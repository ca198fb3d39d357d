"""
Ramification and the period set
===============================

Local invariants of quaternion algebras, reported three-valued where the
local arithmetic above 2 or the conductor is out of reach, and the orders
of torsion elements that follow from them.
"""

from arithfuchs.cyclo import AbelianField
from arithfuchs.families import elkies
from arithfuchs.invariants import period_set, ramification
from arithfuchs.quat import QuaternionAlgebra

# Over Q every prime is decided: odd ones by the tame symbol, 2 by parity.
QQ = AbelianField.rationals()
for a, b in [(-1, -1), (-1, 3), (-3, -7)]:
    ram = ramification(QuaternionAlgebra(QQ, a, b))
    print(f"({a},{b}/Q):", ram.as_dict()["ram_infinite"], ram.as_dict()["ram_finite"], ram.as_dict()["provenance"])

# Hamilton's quaternions contain units of order 3, 4 and 6.
H = QuaternionAlgebra(QQ, -1, -1)
print("periods of (-1,-1/Q):", sorted(period_set(H, ramification(H)).members))

# Over Q(zeta_7)^+ the places above 2 and 7 stay undetermined ...
data = elkies()
loose = ramification(data.algebra)
print("undetermined:", loose.as_dict()["undetermined"])
ps = period_set(data.algebra, loose, witness=False)
print("periods without trust:", sorted(ps.members), "undetermined:", sorted(ps.undetermined))

# ... until the known finite ramification (none) is supplied.
trusted = ramification(data.algebra, data.trusted_ram_finite)
print("periods with Ram_f = {}:", sorted(period_set(data.algebra, trusted).members))
