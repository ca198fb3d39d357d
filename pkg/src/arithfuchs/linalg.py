"""Exact Gaussian elimination over Q and over cyclotomic fields.

Matrices are lists of rows.  Entries only need ``+ - * /`` and a truthiness
test for zero, so the same routines serve ``Fraction`` and ``CycloElement``.
"""

from fractions import Fraction


class SingularMatrix(ArithmeticError):
    pass


def _inv(x):
    return Fraction(1, x) if isinstance(x, int) else 1 / x


def row_echelon(rows):
    """Reduced row echelon form.  Returns ``(rref, pivot_columns)``."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = _inv(m[r][c])
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(rows):
    return len(row_echelon(rows)[1])


def solve(matrix, rhs):
    """Solve ``matrix @ x = rhs`` exactly.

    ``matrix`` may be overdetermined.  Returns ``None`` if the system is
    inconsistent; raises ``SingularMatrix`` if the columns are dependent.
    """
    ncols = len(matrix[0])
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    red, pivots = row_echelon(aug)
    if ncols in pivots:
        return None
    if len(pivots) < ncols:
        raise SingularMatrix("columns are linearly dependent")
    return [red[i][ncols] for i in range(ncols)]


def determinant(matrix):
    m = [list(r) for r in matrix]
    n = len(m)
    det = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return 0 * m[0][0]
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det = det * m[c][c]
        inv = _inv(m[c][c])
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return det


class LeftInverse:
    """Precomputed solver for a fixed full-column-rank rational matrix.

    Picks a set of independent rows, inverts that square block once, and
    then answers ``solve(rhs)`` with a matrix-vector product plus an exact
    consistency check on the remaining rows.
    """

    def __init__(self, matrix):
        self.matrix = [[Fraction(x) for x in row] for row in matrix]
        ncols = len(self.matrix[0])
        # independent rows = pivot columns of the transpose
        transpose = [list(col) for col in zip(*self.matrix)]
        _, rows = row_echelon(transpose)
        if len(rows) < ncols:
            raise SingularMatrix("columns are linearly dependent")
        self.rows = rows
        block = [self.matrix[i] for i in rows]
        eye = [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
        red, _ = row_echelon([b + e for b, e in zip(block, eye)])
        self.inverse = [r[ncols:] for r in red]

    def solve(self, rhs):
        sub = [rhs[i] for i in self.rows]
        x = [sum((a * b for a, b in zip(row, sub)), Fraction(0)) for row in self.inverse]
        for row, b in zip(self.matrix, rhs):
            if sum((a * y for a, y in zip(row, x)), Fraction(0)) != b:
                return None
        return x
