"""Quaternion algebras (a, b / k) over abelian fields.

Elements carry coordinates in the basis 1, i, j, k = ij with i^2 = a,
j^2 = b, ji = -ij.  Matrix images live in M_2(k(sqrt d)) with sqrt d kept
as a formal symbol, so every homomorphism check is exact.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .cyclo import (
    AbelianField,
    CycloElement,
    _rational_sqrt,
    format_element,
    is_integral,
    square_root,
)
from .linalg import SingularMatrix, determinant, row_echelon


class AlgebraMismatch(ValueError):
    pass


class MatrixImageUnavailable(ValueError):
    pass


CONVENTIONS = ("standard", "elkies")


@dataclass(frozen=True, eq=False)
class QuaternionAlgebra:
    """(a, b / k).

    ``convention`` picks the matrix model: ``standard`` sends
    i -> [[0, 1], [a, 0]], j -> diag(sqrt b, -sqrt b); ``elkies`` needs
    a == b = c and sends i -> diag(sqrt c, -sqrt c), j -> [[0, sqrt c], [sqrt c, 0]].
    """

    field: AbelianField
    a: CycloElement
    b: CycloElement
    convention: str = "standard"

    def __post_init__(self):
        a = self.field.element(self.a)
        b = self.field.element(self.b)
        if not a or not b:
            raise ValueError("a and b must be nonzero")
        if self.convention not in CONVENTIONS:
            raise ValueError(f"unknown matrix convention {self.convention!r}")
        if self.convention == "elkies" and a != b:
            raise ValueError("the elkies convention needs a == b")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __eq__(self, other):
        if not isinstance(other, QuaternionAlgebra):
            return NotImplemented
        return (self.field, self.a, self.b, self.convention) == (
            other.field, other.a, other.b, other.convention)

    def __hash__(self):
        return hash((self.field, self.a, self.b, self.convention))

    def __repr__(self):
        return f"QuaternionAlgebra({format_element(self.a)}, {format_element(self.b)})"

    def element(self, x0=0, x1=0, x2=0, x3=0):
        return QuaternionElement(self, tuple(self.field.element(x) for x in (x0, x1, x2, x3)))

    def scalar(self, x):
        return self.element(x)

    @property
    def one(self):
        return self.element(1)

    @property
    def i(self):
        return self.element(0, 1)

    @property
    def j(self):
        return self.element(0, 0, 1)

    @property
    def k(self):
        return self.element(0, 0, 0, 1)

    @property
    def basis(self):
        return (self.one, self.i, self.j, self.k)


class QuaternionElement:
    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        self.algebra = algebra
        self.coords = tuple(coords)

    def _check(self, other):
        if isinstance(other, QuaternionElement):
            if other.algebra != self.algebra:
                raise AlgebraMismatch("elements belong to different algebras")
            return other
        return self.algebra.scalar(other)

    def __add__(self, other):
        other = self._check(other)
        return QuaternionElement(self.algebra, (x + y for x, y in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return QuaternionElement(self.algebra, (-x for x in self.coords))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if not isinstance(other, QuaternionElement):
            c = self.algebra.field.element(other)
            return QuaternionElement(self.algebra, (x * c for x in self.coords))
        other = self._check(other)
        a, b = self.algebra.a, self.algebra.b
        x0, x1, x2, x3 = self.coords
        y0, y1, y2, y3 = other.coords
        ab = a * b
        return QuaternionElement(self.algebra, (
            x0 * y0 + a * x1 * y1 + b * x2 * y2 - ab * x3 * y3,
            x0 * y1 + x1 * y0 - b * x2 * y3 + b * x3 * y2,
            x0 * y2 + x2 * y0 + a * x1 * y3 - a * x3 * y1,
            x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1,
        ))

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, other):
        if isinstance(other, QuaternionElement):
            return self * other.inverse()
        return self * (1 / self.algebra.field.element(other))

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        out = self.algebra.one
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def conj(self):
        x0, x1, x2, x3 = self.coords
        return QuaternionElement(self.algebra, (x0, -x1, -x2, -x3))

    def norm(self):
        a, b = self.algebra.a, self.algebra.b
        x0, x1, x2, x3 = self.coords
        return x0 * x0 - a * x1 * x1 - b * x2 * x2 + a * b * x3 * x3

    def trace(self):
        return 2 * self.coords[0]

    def inverse(self):
        n = self.norm()
        if not n:
            raise ZeroDivisionError("element has norm zero")
        return self.conj() * (1 / n)

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        if isinstance(other, QuaternionElement):
            return self.algebra == other.algebra and self.coords == other.coords
        if isinstance(other, (int, Fraction, CycloElement)):
            return self == self.algebra.scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "QuaternionElement(" + ", ".join(format_element(x) for x in self.coords) + ")"


def quat_arithmetic(x, y, op):
    """Dispatch helper: op in {add, mul, conj, norm, trace}; y unused for unary ops."""
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "conj":
        return x.conj()
    if op == "norm":
        return x.norm()
    if op == "trace":
        return x.trace()
    raise ValueError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# k(sqrt d) and 2x2 matrices over it


class QuadraticElement:
    """u + v sqrt(d) with u, v in k and sqrt(d) formal."""

    __slots__ = ("u", "v", "d")

    def __init__(self, u, v, d):
        self.u, self.v, self.d = u, v, d

    def __add__(self, other):
        return QuadraticElement(self.u + other.u, self.v + other.v, self.d)

    def __sub__(self, other):
        return QuadraticElement(self.u - other.u, self.v - other.v, self.d)

    def __mul__(self, other):
        return QuadraticElement(
            self.u * other.u + self.d * self.v * other.v,
            self.u * other.v + self.v * other.u,
            self.d,
        )

    def __eq__(self, other):
        return self.u == other.u and self.v == other.v

    def __hash__(self):
        return hash((self.u, self.v))

    def __repr__(self):
        return f"({format_element(self.u)} + {format_element(self.v)}*sqrt)"


class MatrixOverQuadratic:
    """2x2 matrix [[p, q], [r, s]] over k(sqrt d)."""

    __slots__ = ("entries", "d")

    def __init__(self, entries, d):
        self.entries = tuple(tuple(row) for row in entries)
        self.d = d

    def __add__(self, other):
        return MatrixOverQuadratic(
            [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)], self.d)

    def __mul__(self, other):
        (p, q), (r, s) = self.entries
        (p2, q2), (r2, s2) = other.entries
        return MatrixOverQuadratic(
            [[p * p2 + q * r2, p * q2 + q * s2], [r * p2 + s * r2, r * q2 + s * s2]], self.d)

    def scale(self, c):
        c = QuadraticElement(c, 0 * c, self.d)
        return MatrixOverQuadratic([[c * x for x in row] for row in self.entries], self.d)

    def determinant(self):
        (p, q), (r, s) = self.entries
        return p * s - q * r

    def __eq__(self, other):
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"MatrixOverQuadratic({self.entries!r})"


def _basis_matrices(A):
    n = A.field.n
    zero = CycloElement.rational(0, n)
    one = CycloElement.rational(1, n)
    a = A.a

    def q(u=zero, v=zero):
        return QuadraticElement(u, v, d)

    if A.convention == "elkies":
        d = a
        mi = [[q(v=one), q()], [q(), q(v=-one)]]
        mj = [[q(), q(v=one)], [q(v=one), q()]]
    else:
        d = A.b
        mi = [[q(), q(one)], [q(a), q()]]
        mj = [[q(v=one), q()], [q(), q(v=-one)]]
    m1 = MatrixOverQuadratic([[q(one), q()], [q(), q(one)]], d)
    mi = MatrixOverQuadratic(mi, d)
    mj = MatrixOverQuadratic(mj, d)
    return m1, mi, mj, mi * mj


def matrix_image(x):
    """Image of x in M_2(k(sqrt d)); d = b (standard) or c (elkies)."""
    mats = _basis_matrices(x.algebra)
    out = None
    for c, m in zip(x.coords, mats):
        term = m.scale(c)
        out = term if out is None else out + term
    return out


def matrix_determinant(m):
    """Determinant as an element of k; raises if it has a sqrt(d) part."""
    det = m.determinant()
    if det.v:
        raise ArithmeticError("determinant is not in the base field")
    return det.u


# ---------------------------------------------------------------------------
# orders


class QuaternionOrder:
    """R_k-span of four quaternions, R_k = Z[generator]."""

    def __init__(self, algebra, basis, generator):
        self.algebra = algebra
        self.basis = tuple(basis)
        if len(self.basis) != 4:
            raise ValueError("an order basis has four elements")
        self.generator = algebra.field.element(generator)
        cols = [list(col) for col in zip(*(e.coords for e in self.basis))]
        if not determinant(cols):
            raise SingularMatrix("order basis is not k-linearly independent")
        eye = [[CycloElement.rational(int(r == c), algebra.field.n) for c in range(4)]
               for r in range(4)]
        red, _ = row_echelon([row + e for row, e in zip(cols, eye)])
        self._inverse = [r[4:] for r in red]

    def coordinates(self, x):
        """k-coordinates of x in the order basis."""
        if x.algebra != self.algebra:
            raise AlgebraMismatch("element belongs to a different algebra")
        return [sum((m * c for m, c in zip(row, x.coords)), CycloElement.rational(0, self.algebra.field.n))
                for row in self._inverse]

    def __repr__(self):
        return f"QuaternionOrder({self.algebra!r}, generator={format_element(self.generator)})"


def order_membership(O, x):
    """4 x d integer table of x's coordinates over Z[generator], or None."""
    d = O.algebra.field.degree
    table = []
    for c in O.coordinates(x):
        row = is_integral(c, O.generator, d)
        if row is None:
            return None
        table.append(row)
    return table


def norm_one(O, x):
    return order_membership(O, x) is not None and x.norm() == 1


@dataclass
class ClosureCertificate:
    closed: bool
    failure: str = ""
    detail: tuple = ()

    def __bool__(self):
        return self.closed


def order_closure_check(O):
    """Closure of the basis under products, plus integral traces and norms."""
    d = O.algebra.field.degree
    for n, e in enumerate(O.basis):
        if is_integral(e.trace(), O.generator, d) is None:
            return ClosureCertificate(False, "trace", (n, format_element(e.trace())))
        if is_integral(e.norm(), O.generator, d) is None:
            return ClosureCertificate(False, "norm", (n, format_element(e.norm())))
    for (r, x), (s, y) in product(enumerate(O.basis), repeat=2):
        if order_membership(O, x * y) is None:
            coords = tuple(format_element(c) for c in O.coordinates(x * y))
            return ClosureCertificate(False, "product", (r, s, coords))
    return ClosureCertificate(True)


# ---------------------------------------------------------------------------
# pure quaternions with prescribed square


def _rational_solutions(vectors, target, bound):
    """Rational (s1, s2, s3), all squares, with sum s_i * vectors[i] = target."""
    rows = [list(r) + [t] for r, t in zip(zip(*vectors), target)]
    red, pivots = row_echelon(rows)
    ncols = len(vectors)
    if ncols in pivots:
        return
    free = [c for c in range(ncols) if c not in pivots]
    squares = sorted({Fraction(n * n, m * m) for n in range(bound + 1) for m in range(1, bound + 1)})
    for values in product(squares, repeat=len(free)):
        sol = [Fraction(0)] * ncols
        for c, v in zip(free, values):
            sol[c] = v
        for r, c in enumerate(pivots):
            sol[c] = red[r][ncols] - sum((red[r][f] * sol[f] for f in free), Fraction(0))
        roots = [_rational_sqrt(s) for s in sol]
        if all(x is not None for x in roots) and any(roots):
            yield roots


def find_sqrt_witness(A, c, bound=3, hints=()):
    """A pure quaternion x with x*x == c, or None if none is found.

    Tries x = sqrt(c/s) e for e in i, j, k (s = a, b, -ab), first with the
    supplied ``hints`` as candidate roots, then by an exact square-root search
    in k, then a rational search x = r1 i + r2 j + r3 k.  None only means the
    search came up empty.
    """
    c = A.field.element(c)
    if not c:
        raise ValueError("c must be nonzero")
    slots = ((1, A.a), (2, A.b), (3, -A.a * A.b))
    hints = [A.field.element(h) for h in hints]
    for use_hints in (True, False):
        for idx, s in slots:
            y = c / s
            root = None
            if use_hints:
                root = next((h for h in hints if h * h == y), None)
            else:
                try:
                    root = square_root(y, A.field)
                except NotImplementedError:
                    root = None
            if root is not None:
                coords = [0, 0, 0, 0]
                coords[idx] = root
                x = A.element(*coords)
                if x * x == c:
                    return x
    vectors = [list(s.coeffs) for _, s in slots]
    for r1, r2, r3 in _rational_solutions(vectors, list(c.coeffs), bound):
        x = A.element(0, r1, r2, r3)
        if x * x == c:
            return x
    return None
