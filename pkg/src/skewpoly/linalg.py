"""Exact dense linear algebra over a division ring, left-sided throughout.

Coefficient vectors act on matrices from the left (lambda * A), matching
how skew polynomial coefficients combine Vandermonde rows.  No right
module API is exposed; over a noncommutative ring a silently flipped
convention is the classic way to corrupt results.

Elimination uses no pivoting heuristics: arithmetic is exact, so the
first nonzero entry wins and output is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NoSolution, RingMismatch


class Matrix:
    """Immutable dense matrix over one division ring.

    Optional row/col labels travel with the matrix so that Vandermonde
    instances remember which monomial/point each line came from.
    """

    __slots__ = ("ring", "rows", "nrows", "ncols", "row_labels", "col_labels")

    def __init__(self, ring, rows, row_labels=None, col_labels=None):
        rows = tuple(tuple(r) for r in rows)
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        self.ring = ring
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols
        self.row_labels = tuple(row_labels) if row_labels is not None else None
        self.col_labels = tuple(col_labels) if col_labels is not None else None

    def entry(self, r, c):
        return self.rows[r][c]

    def to_json(self):
        enc = self.ring.element_to_json
        return [[enc(x) for x in row] for row in self.rows]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.ring == other.ring
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols} over {self.ring!r})"


def identity(ring, n):
    one, zero = ring.one(), ring.zero()
    return Matrix(ring, [[one if i == j else zero for j in range(n)] for i in range(n)])


def mat_mul(A, B):
    if A.ring != B.ring:
        raise RingMismatch("matrix product over different rings")
    if A.ncols != B.nrows:
        raise ValueError("inner dimensions differ")
    zero = A.ring.zero()
    out = []
    for i in range(A.nrows):
        arow = A.rows[i]
        row = []
        for j in range(B.ncols):
            acc = zero
            for k in range(A.ncols):
                a = arow[k]
                if not a.is_zero():
                    acc = acc + a * B.rows[k][j]
            row.append(acc)
        out.append(row)
    return Matrix(A.ring, out)


def left_apply(vec, A):
    """The row vector lambda * A (lambda entries multiply rows on the left)."""
    if len(vec) != A.nrows:
        raise ValueError("vector length must equal the row count")
    zero = A.ring.zero()
    out = [zero] * A.ncols
    for r, lam in enumerate(vec):
        if lam.is_zero():
            continue
        row = A.rows[r]
        for c in range(A.ncols):
            x = row[c]
            if not x.is_zero():
                out[c] = out[c] + lam * x
    return tuple(out)


@dataclass
class ReducedForm:
    """T * A = R with R reduced row echelon and T invertible."""

    R: Matrix
    T: Matrix
    pivots: tuple


def row_reduce_left(A):
    """Reduced row echelon form of A under left row operations.

    Allowed moves: swap, row <- c * row (c nonzero), row_i <- row_i -
    c * row_j, always with c applied on the left.  Returns the echelon
    matrix, the accumulated transform, and the pivot column indices.
    """
    ring = A.ring
    R = [list(r) for r in A.rows]
    T = [list(r) for r in identity(ring, A.nrows).rows]
    pivots = []
    prow = 0
    for col in range(A.ncols):
        src = None
        for r in range(prow, A.nrows):
            if not R[r][col].is_zero():
                src = r
                break
        if src is None:
            continue
        if src != prow:
            R[src], R[prow] = R[prow], R[src]
            T[src], T[prow] = T[prow], T[src]
        c = R[prow][col].inv()
        R[prow] = [c * x for x in R[prow]]
        T[prow] = [c * x for x in T[prow]]
        for r in range(A.nrows):
            if r == prow:
                continue
            f = R[r][col]
            if f.is_zero():
                continue
            R[r] = [x - f * y for x, y in zip(R[r], R[prow])]
            T[r] = [x - f * y for x, y in zip(T[r], T[prow])]
        pivots.append(col)
        prow += 1
        if prow == A.nrows:
            break
    return ReducedForm(R=Matrix(ring, R), T=Matrix(ring, T), pivots=tuple(pivots))


def rank(A):
    """Number of pivots; over a division ring this is also the column rank."""
    if A.ncols == 0 or A.nrows == 0:
        return 0
    return len(row_reduce_left(A).pivots)


def left_null_space(A):
    """Left-independent basis of {lambda : lambda * A = 0}.

    Rows of the transform T aligned with zero rows of the echelon form:
    those satisfy T_r * A = R_r = 0, and T being invertible makes them
    independent and spanning.  Basis size is nrows - rank.
    """
    if A.nrows == 0:
        return []
    red = row_reduce_left(A)
    out = []
    for r in range(A.nrows):
        if all(x.is_zero() for x in red.R.rows[r]):
            out.append(tuple(red.T.rows[r]))
    return out


def solve_left(A, b):
    """Some lambda with lambda * A = b, or NoSolution.

    Writing lambda = mu * T, consistency reduces to reading mu off the
    pivot rows of the echelon form (free rows get 0, making the output
    deterministic) and checking the reproduced right-hand side.
    """
    b = tuple(b)
    if len(b) != A.ncols:
        raise ValueError("right-hand side length must equal the column count")
    ring = A.ring
    zero = ring.zero()
    if A.nrows == 0:
        if all(x.is_zero() for x in b):
            return ()
        raise NoSolution("empty matrix spans only zero")
    red = row_reduce_left(A)
    mu = [zero] * A.nrows
    for r, col in enumerate(red.pivots):
        mu[r] = b[col]
    check = left_apply(tuple(mu), red.R)
    if any(x != y for x, y in zip(check, b)):
        raise NoSolution("right-hand side outside the left row space")
    return left_apply(tuple(mu), red.T)
