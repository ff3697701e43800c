"""Exact linear algebra over arbitrary-precision rationals.

Scalars are ``fractions.Fraction`` (always in lowest terms, positive
denominator), so every operation in this module is exact.  Matrices are
immutable values; operations return fresh objects and are safe to share
between threads.

No floating point enters this module.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
RationalVector = tuple[Fraction, ...]

Scalar = Union[int, str, Fraction]


def to_rational(x: Scalar) -> Fraction:
    """Coerce ints, fraction strings like ``"-3/7"``, and Fractions."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational scalar")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip().replace("−", "-"))
    raise TypeError(f"cannot interpret {x!r} as a rational number")


def vector(entries: Iterable[Scalar]) -> RationalVector:
    return tuple(to_rational(x) for x in entries)


class RationalMatrix:
    """Immutable dense matrix of rationals, stored row-major."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[Scalar]):
        ent = tuple(to_rational(x) for x in entries)
        if len(ent) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(ent)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_entries", ent)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]]) -> "RationalMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
        return cls(nrows, ncols, [x for row in rows for x in row])

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self._entries[i * self.cols + j]

    def row(self, i: int) -> RationalVector:
        return self._entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> RationalVector:
        return tuple(self._entries[i * self.cols + j] for i in range(self.rows))

    def row_list(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            self.cols,
            self.rows,
            [self._entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
        )

    def matmul(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch for matmul")
        rows = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                rows.append(sum(ri[k] * other[k, j] for k in range(self.cols)))
        return RationalMatrix(self.rows, other.cols, rows)

    def apply(self, v: Sequence[Scalar]) -> RationalVector:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        vv = vector(v)
        return tuple(
            sum(self.row(i)[k] * vv[k] for k in range(self.cols)) for i in range(self.rows)
        )

    def submatrix_columns(self, cols: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix(
            self.rows,
            len(cols),
            [self._entries[i * self.cols + j] for i in range(self.rows) for j in cols],
        )

    def submatrix_rows(self, rows: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix(
            len(rows), self.cols, [self._entries[i * self.cols + j] for i in rows for j in range(self.cols)]
        )

    def is_zero(self) -> bool:
        return all(x == 0 for x in self._entries)

    def is_integer(self) -> bool:
        return all(x.denominator == 1 for x in self._entries)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self._entries == other._entries
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._entries))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"RationalMatrix({self.rows}x{self.cols}: {body})"


def rref(M: RationalMatrix) -> tuple[RationalMatrix, list[int]]:
    """Reduced row echelon form and the pivot columns, in order.

    Pivoting is deterministic: the first nonzero entry of each column is
    used, so identical inputs give identical outputs.
    """
    m = M.row_list()
    nrows, ncols = M.rows, M.cols
    pivots: list[int] = []
    pr = 0
    for pc in range(ncols):
        pivot_row = None
        for i in range(pr, nrows):
            if m[i][pc] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[pr], m[pivot_row] = m[pivot_row], m[pr]
        pv = m[pr][pc]
        if pv != 1:
            m[pr] = [x / pv for x in m[pr]]
        for i in range(nrows):
            if i != pr and m[i][pc] != 0:
                f = m[i][pc]
                m[i] = [a - f * b for a, b in zip(m[i], m[pr])]
        pivots.append(pc)
        pr += 1
        if pr == nrows:
            break
    return RationalMatrix(nrows, ncols, [x for row in m for x in row]), pivots


def rank(M: RationalMatrix) -> int:
    return len(rref(M)[1])


def kernel_basis(M: RationalMatrix) -> RationalMatrix:
    """Basis of the right kernel {x : Mx = 0}, one basis vector per row.

    Row count is cols(M) - rank(M).  Built from the reduced echelon form:
    each free column contributes the standard back-substituted vector.
    """
    R, pivots = rref(M)
    ncols = M.cols
    pivot_set = set(pivots)
    free = [j for j in range(ncols) if j not in pivot_set]
    rows = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r_idx, p in enumerate(pivots):
            v[p] = -R[r_idx, f]
        rows.append(v)
    return RationalMatrix(len(free), ncols, [x for row in rows for x in row])


def solve_affine(
    M: RationalMatrix, b: Sequence[Scalar]
) -> tuple[RationalVector, RationalMatrix] | None:
    """Solve Mx = b exactly.

    Returns (particular solution, kernel basis) when the system is
    consistent, and None otherwise.
    """
    if len(b) != M.rows:
        raise ValueError("right-hand side length mismatch")
    bb = vector(b)
    aug = RationalMatrix(M.rows, M.cols + 1, [x for i in range(M.rows) for x in (*M.row(i), bb[i])])
    R, pivots = rref(aug)
    if M.cols in pivots:
        return None
    particular = [Fraction(0)] * M.cols
    for r_idx, p in enumerate(pivots):
        particular[p] = R[r_idx, M.cols]
    return tuple(particular), kernel_basis(M)


def det(M: RationalMatrix) -> Fraction:
    """Exact determinant via fraction Gaussian elimination."""
    if M.rows != M.cols:
        raise ValueError("determinant requires a square matrix")
    n = M.rows
    m = M.row_list()
    sign = 1
    result = Fraction(1)
    for c in range(n):
        pivot_row = None
        for i in range(c, n):
            if m[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != c:
            m[c], m[pivot_row] = m[pivot_row], m[c]
            sign = -sign
        pv = m[c][c]
        result *= pv
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / pv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return sign * result


def row_space_equal(A: RationalMatrix, B: RationalMatrix) -> bool:
    """Whether two matrices span the same row space."""
    if A.cols != B.cols:
        return False
    ra, rb = rank(A), rank(B)
    if ra != rb:
        return False
    stacked = RationalMatrix(
        A.rows + B.rows,
        A.cols,
        [x for i in range(A.rows) for x in A.row(i)]
        + [x for i in range(B.rows) for x in B.row(i)],
    )
    return rank(stacked) == ra


def first_independent_rows(M: RationalMatrix) -> list[int]:
    """Indices of the lexicographically first maximal independent row set."""
    chosen: list[int] = []
    current_rank = 0
    for i in range(M.rows):
        candidate = M.submatrix_rows(chosen + [i])
        r = rank(candidate)
        if r > current_rank:
            chosen.append(i)
            current_rank = r
    return chosen


def in_row_span(M: RationalMatrix, v: Sequence[Scalar]) -> bool:
    """Whether v lies in the row span of M."""
    return solve_affine(M.transpose(), v) is not None
