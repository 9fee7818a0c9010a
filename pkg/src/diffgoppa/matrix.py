"""Exact dense linear algebra over finite fields.

Row echelon pivoting scans top-to-bottom for the first nonzero entry so all
outputs are deterministic.  Dimensions are desk scale; no sparsity.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .errors import CombinatorialBudgetExceeded, FieldMismatch

DEFAULT_SUBSET_CAP = 10**7


class FqMatrix:
    """Dense matrix with entries in a fixed finite field, row-major."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field, rows, cols, entries):
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match shape")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = list(entries)

    @classmethod
    def from_rows(cls, field, row_lists):
        rows = len(row_lists)
        cols = len(row_lists[0]) if rows else 0
        entries = []
        for r in row_lists:
            if len(r) != cols:
                raise ValueError("ragged rows")
            entries.extend(field.element(x) for x in r)
        return cls(field, rows, cols, entries)

    @classmethod
    def identity(cls, field, n):
        one, zero = field.one(), field.zero()
        return cls(field, n, n, [one if i == j else zero for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, field, rows, cols):
        zero = field.zero()
        return cls(field, rows, cols, [zero] * (rows * cols))

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r * self.cols + c]

    def __setitem__(self, rc, value):
        r, c = rc
        self.entries[r * self.cols + c] = self.field.element(value)

    def row(self, r):
        return self.entries[r * self.cols:(r + 1) * self.cols]

    def row_lists(self):
        return [self.row(r) for r in range(self.rows)]

    def copy(self):
        return FqMatrix(self.field, self.rows, self.cols, list(self.entries))

    def transpose(self):
        return FqMatrix(
            self.field, self.cols, self.rows,
            [self[r, c] for c in range(self.cols) for r in range(self.rows)],
        )

    def __mul__(self, other):
        if isinstance(other, FqMatrix):
            if self.field != other.field:
                raise FieldMismatch("matrix product across fields")
            if self.cols != other.rows:
                raise ValueError("inner dimensions disagree")
            zero = self.field.zero()
            out = []
            for r in range(self.rows):
                rr = self.row(r)
                for c in range(other.cols):
                    acc = zero
                    for k in range(self.cols):
                        acc = acc + rr[k] * other[k, c]
                    out.append(acc)
            return FqMatrix(self.field, self.rows, other.cols, out)
        return NotImplemented

    def apply(self, vector):
        """Matrix times column vector (a list of field elements)."""
        if len(vector) != self.cols:
            raise ValueError("vector length does not match columns")
        zero = self.field.zero()
        out = []
        for r in range(self.rows):
            acc = zero
            rr = self.row(r)
            for k in range(self.cols):
                acc = acc + rr[k] * vector[k]
            out.append(acc)
        return out

    def __eq__(self, other):
        if not isinstance(other, FqMatrix):
            return NotImplemented
        return (self.field == other.field and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __repr__(self):
        body = "; ".join(" ".join(repr(e) for e in self.row(r)) for r in range(self.rows))
        return f"FqMatrix({self.rows}x{self.cols}: {body})"


def rref(M):
    """Reduced row echelon form plus pivot column indices."""
    R = M.copy()
    pivots = []
    pr = 0
    for c in range(R.cols):
        pivot_row = None
        for r in range(pr, R.rows):
            if not R[r, c].is_zero():
                pivot_row = r
                break
        if pivot_row is None:
            continue
        if pivot_row != pr:
            for j in range(R.cols):
                R.entries[pr * R.cols + j], R.entries[pivot_row * R.cols + j] = (
                    R.entries[pivot_row * R.cols + j], R.entries[pr * R.cols + j])
        inv = R[pr, c].inverse()
        for j in range(c, R.cols):
            R[pr, j] = R[pr, j] * inv
        for r in range(R.rows):
            if r != pr and not R[r, c].is_zero():
                factor = R[r, c]
                for j in range(c, R.cols):
                    R[r, j] = R[r, j] - factor * R[pr, j]
        pivots.append(c)
        pr += 1
        if pr == R.rows:
            break
    return R, tuple(pivots)


def rank(M):
    return len(rref(M)[1])


def kernel_basis(M):
    """Rows span the right kernel {x : M x = 0}."""
    R, pivots = rref(M)
    free = [c for c in range(M.cols) if c not in pivots]
    zero, one = M.field.zero(), M.field.one()
    rows = []
    for f in free:
        x = [zero] * M.cols
        x[f] = one
        for i, p in enumerate(pivots):
            x[p] = -R[i, f]
        rows.append(x)
    if not rows:
        return FqMatrix(M.field, 0, M.cols, [])
    return FqMatrix.from_rows(M.field, rows)


def _stripped_rref(M):
    R, pivots = rref(M)
    k = len(pivots)
    return [tuple(R.row(r)) for r in range(k)]


def row_space_equal(A, B):
    if A.field != B.field or A.cols != B.cols:
        raise FieldMismatch("row spaces live in different ambient spaces")
    return _stripped_rref(A) == _stripped_rref(B)


def invert(M):
    """Inverse of a square matrix via augmented elimination."""
    if M.rows != M.cols:
        raise ValueError("only square matrices invert")
    n = M.rows
    aug = FqMatrix(M.field, n, 2 * n, [M.field.zero()] * (n * 2 * n))
    for r in range(n):
        for c in range(n):
            aug[r, c] = M[r, c]
        aug[r, n + r] = M.field.one()
    R, pivots = rref(aug)
    if tuple(pivots) != tuple(range(n)):
        raise ValueError("matrix is singular")
    return FqMatrix(M.field, n, n, [R[r, n + c] for r in range(n) for c in range(n)])


def all_column_subsets_full_rank(G, w, cap=DEFAULT_SUBSET_CAP):
    """True iff every w-column submatrix has rank equal to G.rows.

    Returns (ok, first_failing_subset_or_None); subsets scanned in
    lexicographic order so the failure witness is deterministic.
    """
    total = comb(G.cols, w)
    if total > cap:
        raise CombinatorialBudgetExceeded(
            f"{total} column subsets exceed cap {cap}", subsets=total, cap=cap)
    for subset in combinations(range(G.cols), w):
        sub = FqMatrix(G.field, G.rows, w,
                       [G[r, c] for r in range(G.rows) for c in subset])
        if rank(sub) < G.rows:
            return False, subset
    return True, None
