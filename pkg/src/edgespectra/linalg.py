"""Exact integer linear algebra.

All routines work on :class:`IntMatrix`, a dense immutable matrix of Python
ints.  Nothing here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .poly import IntPoly


class IntMatrix:
    """Dense rectangular matrix of arbitrary-precision integers."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable[int]], ncols: int | None = None):
        self.rows: tuple[tuple[int, ...], ...] = tuple(tuple(int(v) for v in r) for r in rows)
        self.nrows = len(self.rows)
        if self.rows:
            self.ncols = len(self.rows[0])
            if any(len(r) != self.ncols for r in self.rows):
                raise ValueError("ragged rows")
        else:
            self.ncols = ncols or 0

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> IntMatrix:
        ncols = nrows if ncols is None else ncols
        return cls(((0,) * ncols for _ in range(nrows)), ncols=ncols)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(tuple(int(i == j) for j in range(n)) for i in range(n))

    @classmethod
    def diagonal(cls, entries: Sequence[int]) -> IntMatrix:
        n = len(entries)
        return cls(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n))

    @classmethod
    def block(cls, grid: Sequence[Sequence[IntMatrix]]) -> IntMatrix:
        """Assemble a matrix from a grid of conforming blocks."""
        rows: list[tuple[int, ...]] = []
        for brow in grid:
            for i in range(brow[0].nrows):
                rows.append(tuple(v for b in brow for v in b.rows[i]))
        ncols = sum(b.ncols for b in grid[0]) if grid else 0
        return cls(rows, ncols=ncols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.shape, self.rows))

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.rows]})"

    def __add__(self, other: IntMatrix) -> IntMatrix:
        self._check_same_shape(other)
        return IntMatrix(
            (tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
            ncols=self.ncols,
        )

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        self._check_same_shape(other)
        return IntMatrix(
            (tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
            ncols=self.ncols,
        )

    def __neg__(self) -> IntMatrix:
        return IntMatrix((tuple(-a for a in r) for r in self.rows), ncols=self.ncols)

    def __mul__(self, k: int) -> IntMatrix:
        return IntMatrix((tuple(k * a for a in r) for r in self.rows), ncols=self.ncols)

    __rmul__ = __mul__

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        other_rows = other.rows
        out = []
        for r in self.rows:
            acc = [0] * other.ncols
            for k, a in enumerate(r):
                if a:
                    for j, b in enumerate(other_rows[k]):
                        if b:
                            acc[j] += a * b
            out.append(acc)
        return IntMatrix(out, ncols=other.ncols)

    def matvec(self, v: Sequence[int]) -> list[int]:
        return [sum(a * b for a, b in zip(r, v)) for r in self.rows]

    @property
    def T(self) -> IntMatrix:
        return IntMatrix(zip(*self.rows), ncols=self.nrows) if self.rows else IntMatrix.zeros(self.ncols, 0)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> IntMatrix:
        return IntMatrix((tuple(self.rows[i][j] for j in cols) for i in rows), ncols=len(cols))

    def minor(self, i: int, j: int) -> IntMatrix:
        """Delete row ``i`` and column ``j``."""
        rows = [r for r in range(self.nrows) if r != i]
        cols = [c for c in range(self.ncols) if c != j]
        return self.submatrix(rows, cols)

    def permuted(self, perm: Sequence[int]) -> IntMatrix:
        """Symmetric permutation: entry (i, j) of the result is (perm[i], perm[j])."""
        return self.submatrix(perm, perm)

    def diag(self) -> list[int]:
        return [self.rows[i][i] for i in range(min(self.shape))]

    def trace(self) -> int:
        return sum(self.diag())

    def row_sums(self) -> list[int]:
        return [sum(r) for r in self.rows]

    def col_sums(self) -> list[int]:
        return [sum(c) for c in zip(*self.rows)] if self.rows else [0] * self.ncols

    def is_zero(self) -> bool:
        return all(not any(r) for r in self.rows)

    def is_symmetric(self) -> bool:
        return self.is_square and self == self.T

    def _check_same_shape(self, other: IntMatrix) -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def to_json(self) -> list[list[str]]:
        return [[str(v) for v in r] for r in self.rows]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[str]]) -> IntMatrix:
        return cls((int(v) for v in r) for r in data)


def _require_square(a: IntMatrix) -> None:
    if not a.is_square:
        raise ValueError(f"square matrix required, got {a.shape}")


def charpoly(a: IntMatrix) -> IntPoly:
    """det(xI - A) by Berkowitz's division-free recurrence.

    Each step borders the leading principal submatrix by one row and column
    and multiplies the running coefficient vector by a lower-triangular
    Toeplitz matrix built from ``R A^i C``.  Only ring operations are used,
    so every intermediate is an integer.  Row sparsity is exploited in the
    matrix-vector products; edge matrices are mostly zeros.
    """
    _require_square(a)
    n = a.nrows
    rows = a.rows
    # nonzeros per row, ascending column; the prefix with col < k is the
    # leading k x k block's row
    nz = [[(j, v) for j, v in enumerate(r) if v] for r in rows]
    poly = [1]  # descending coefficients
    for k in range(n):
        lead = [[(j, v) for j, v in nz[i] if j < k] for i in range(k)]
        row = [(j, v) for j, v in nz[k] if j < k]
        vec = [rows[i][k] for i in range(k)]
        toeplitz = [1, -rows[k][k]]
        for _ in range(k):
            toeplitz.append(-sum(v * vec[j] for j, v in row))
            vec = [sum(v * vec[j] for j, v in r) for r in lead]
        poly = [
            sum(toeplitz[i - l] * poly[l] for l in range(max(0, i - k - 1), min(i, len(poly) - 1) + 1))
            for i in range(k + 2)
        ]
    return IntPoly.from_descending(poly)


def _bareiss(rows: list[list[int]]) -> tuple[list[list[int]], list[int], int]:
    """Fraction-free forward elimination in place.

    Returns the echelon rows, the pivot columns and the sign of the row
    permutation.  Pivot choice is the first nonzero entry in column order,
    so the result is deterministic.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    sign = 1
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
            sign = -sign
        piv = rows[r][c]
        pr = rows[r]
        for i in range(r + 1, nrows):
            ri = rows[i]
            f = ri[c]
            for j in range(c + 1, ncols):
                ri[j] = (piv * ri[j] - f * pr[j]) // prev
            ri[c] = 0
        # entries left of c in rows below r are already zero
        prev = piv
        pivots.append(c)
        r += 1
    return rows, pivots, sign


def determinant(a: IntMatrix) -> int:
    """Exact determinant by Bareiss elimination."""
    _require_square(a)
    n = a.nrows
    if n == 0:
        return 1
    rows, pivots, sign = _bareiss([list(r) for r in a.rows])
    if len(pivots) < n:
        return 0
    return sign * rows[n - 1][n - 1]


def cofactor(a: IntMatrix, i: int, j: int) -> int:
    """(-1)^(i+j) det of ``a`` with row ``i`` and column ``j`` removed (0-based)."""
    _require_square(a)
    s = -1 if (i + j) % 2 else 1
    return s * determinant(a.minor(i, j))


@dataclass(frozen=True)
class RationalVector:
    numerators: tuple[int, ...]
    denominator: int = 1

    def __post_init__(self) -> None:
        if self.denominator <= 0:
            raise ValueError("denominator must be positive")

    def __len__(self) -> int:
        return len(self.numerators)

    def __getitem__(self, i: int) -> Fraction:
        return Fraction(self.numerators[i], self.denominator)

    def is_zero(self) -> bool:
        return not any(self.numerators)


def kernel_vector(a: IntMatrix) -> RationalVector | None:
    """A nonzero exact ``v`` with ``a v = 0``, or None if ``a`` is nonsingular.

    The first free column (in column order) gets value 1, every other free
    column 0; pivot variables follow by back-substitution.  The result is
    rescaled to a primitive integer vector with positive first nonzero entry.
    """
    _require_square(a)
    n = a.ncols
    if n == 0:
        return None
    rows, pivots, _ = _bareiss([list(r) for r in a.rows])
    free = [c for c in range(n) if c not in set(pivots)]
    if not free:
        return None
    x: list[Fraction] = [Fraction(0)] * n
    x[free[0]] = Fraction(1)
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        row = rows[r]
        s = sum((row[j] * x[j] for j in range(c + 1, n) if row[j] and x[j]), Fraction(0))
        x[c] = -s / row[c]
    den = 1
    for v in x:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in x]
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    first = next(v for v in ints if v)
    if first < 0:
        ints = [-v for v in ints]
    return RationalVector(tuple(ints), 1)


def is_nilpotent(a: IntMatrix) -> bool:
    """True iff ``a**k == 0`` where ``k`` is the order of ``a``.

    The nilpotency index never exceeds the order, so squaring until the
    exponent reaches at least ``k`` decides it.
    """
    _require_square(a)
    k = a.nrows
    p = a
    e = 1
    while e < k:
        if p.is_zero():
            return True
        p = p @ p
        e *= 2
    return p.is_zero()
