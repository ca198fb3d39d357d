"""
Quaternion algebras, matrices and orders
========================================

The algebra (c, c) over Q(zeta_7)^+ with c = 2cos(2pi/7), its image in
2x2 matrices and a closed order containing a half-integral element.
"""

from arithfuchs.cyclo import format_element
from arithfuchs.families import elkies
from arithfuchs.quat import matrix_determinant, matrix_image, order_closure_check, order_membership

data = elkies()
A = data.algebra
i, j = A.i, A.j

# i^2 = j^2 = c and ij = -ji
print("i^2 == c:", i * i == A.scalar(data.c))
print("ij == -ji:", i * j == -(j * i))

# The matrix image is a ring map and the determinant is the reduced norm.
x = A.one + i * 2 - j + A.k * data.c
m = matrix_image(x)
print("det == norm:", matrix_determinant(m) == x.norm())
print("norm of x:", format_element(x.norm()))

# j' = (1 + c i + (c^2 + c + 1) j)/2 is integral and the order it spans is
# closed under multiplication.  j itself is not in this order.
print("order closed:", bool(order_closure_check(data.order)))
print("coordinates of j:", order_membership(data.order, j))
