"""Exact dense linear algebra over the rationals.

Everything in this package reduces to elimination over ``fractions.Fraction``:
ranks, nullspaces, inverses and the two-sided transforms that bring a
rectangular matrix to the form diag(I_r, 0).  No floating point is used
anywhere; results are exact and deterministic (first-nonzero pivoting, columns
scanned left to right).
"""

from __future__ import annotations

import functools
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction
Vector = tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class NonSquareError(ValueError):
    """An operation that needs a square matrix was given a rectangular one."""


class SingularMatrixError(ValueError):
    """Inversion was attempted on a matrix without full rank."""


def as_fraction(value: int | Fraction | str) -> Fraction:
    """Coerce ``value`` to ``Fraction``, refusing floats (exactness contract)."""
    if type(value) is Fraction:
        return value
    if isinstance(value, float):
        raise TypeError(f"refusing float entry {value!r}; use Fraction or int")
    return Fraction(value)


class Matrix:
    """Immutable rectangular matrix with ``Fraction`` entries.

    Zero-dimensional shapes (0 rows and/or 0 columns) are legal and behave
    consistently under every operation; they show up naturally as corner
    blocks once a rank equals a block size.
    """

    __slots__ = ("rows", "cols", "entries", "_zero")

    def __init__(self, data: Iterable[Sequence[int | Fraction | str]], cols: int | None = None):
        rows_data = tuple(tuple(as_fraction(x) for x in row) for row in data)
        if rows_data:
            ncols = len(rows_data[0])
            if any(len(row) != ncols for row in rows_data):
                raise ValueError("ragged rows")
            if cols is not None and cols != ncols:
                raise ValueError(f"cols={cols} disagrees with row length {ncols}")
        else:
            ncols = 0 if cols is None else cols
        if ncols < 0:
            raise ValueError("negative column count")
        object.__setattr__(self, "rows", len(rows_data))
        object.__setattr__(self, "cols", ncols)
        object.__setattr__(self, "entries", rows_data)
        object.__setattr__(self, "_zero", None)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("Matrix is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def _trusted(cls, rows_data: tuple[tuple[Fraction, ...], ...], cols: int) -> Matrix:
        """Internal fast path: entries are known-good Fraction tuples."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "rows", len(rows_data))
        object.__setattr__(obj, "cols", cols)
        object.__setattr__(obj, "entries", rows_data)
        object.__setattr__(obj, "_zero", None)
        return obj

    @staticmethod
    @functools.lru_cache(maxsize=None)
    def zeros(rows: int, cols: int) -> Matrix:
        return Matrix._trusted(tuple((_ZERO,) * cols for _ in range(rows)), cols)

    @staticmethod
    @functools.lru_cache(maxsize=None)
    def identity(n: int) -> Matrix:
        return Matrix._trusted(
            tuple(tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n)), n
        )

    @staticmethod
    def unit(rows: int, cols: int, i: int, j: int) -> Matrix:
        """Matrix unit: single 1 at 0-based position (i, j)."""
        return Matrix(
            [[_ONE if (a, b) == (i, j) else _ZERO for b in range(cols)] for a in range(rows)],
            cols=cols,
        )

    @staticmethod
    def from_rows(vectors: Sequence[Sequence[int | Fraction]], cols: int) -> Matrix:
        """Stack row vectors; ``cols`` disambiguates the empty stack."""
        return Matrix(vectors, cols=cols)

    # -- basic access ------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"Matrix({[list(map(str, row)) for row in self.entries]}, cols={self.cols})"

    # -- arithmetic --------------------------------------------------------

    def _require_same_shape(self, other: Matrix) -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: Matrix) -> Matrix:
        self._require_same_shape(other)
        if self._zero is True:
            return other
        if other._zero is True:
            return self
        # entries are immutable, so zero summands can hand back the other side
        return Matrix._trusted(
            tuple(
                tuple((a + b) if a and b else (a or b) for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
            self.cols,
        )

    def __sub__(self, other: Matrix) -> Matrix:
        self._require_same_shape(other)
        if other._zero is True:
            return self
        return Matrix._trusted(
            tuple(
                tuple((a - b) if a and b else (a if not b else -b) for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
            self.cols,
        )

    def __neg__(self) -> Matrix:
        return Matrix._trusted(
            tuple(tuple(-a if a else a for a in row) for row in self.entries), self.cols
        )

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        if self._zero is True or other._zero is True:
            return Matrix.zeros(self.rows, other.cols)
        out = [[_ZERO] * other.cols for _ in range(self.rows)]
        other_entries = other.entries
        for i, row_a in enumerate(self.entries):
            out_row = out[i]
            for k, a_ik in enumerate(row_a):
                if a_ik:  # skip structural zeros; inputs here are mostly sparse
                    row_b = other_entries[k]
                    for j, b_kj in enumerate(row_b):
                        if b_kj:
                            out_row[j] += a_ik * b_kj
        return Matrix._trusted(tuple(tuple(row) for row in out), other.cols)

    def scaled(self, c: int | Fraction) -> Matrix:
        c = as_fraction(c)
        return Matrix._trusted(
            tuple(tuple(c * a for a in row) for row in self.entries), self.cols
        )

    def transpose(self) -> Matrix:
        return Matrix._trusted(
            tuple(
                tuple(self.entries[i][j] for i in range(self.rows))
                for j in range(self.cols)
            ),
            self.rows,
        )

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise NonSquareError(f"trace of {self.shape} matrix")
        return sum((self.entries[i][i] for i in range(self.rows)), _ZERO)

    def is_zero(self) -> bool:
        flag = self._zero
        if flag is None:  # computed once; instances are immutable
            flag = all(not a for row in self.entries for a in row)
            object.__setattr__(self, "_zero", flag)
        return flag


# -- elimination ----------------------------------------------------------


def _gauss_jordan(
    work: list[list[Fraction]], cols: int, track: list[list[Fraction]] | None
) -> list[int]:
    """Reduce ``work`` in place to reduced row echelon form.

    Pivot choice is deterministic: columns are scanned left to right and the
    first row (top to bottom) with a nonzero entry is used.  ``track``, when
    given, receives the same row operations (seed it with an identity to
    accumulate the transform).  Returns the pivot column list.
    """
    pivots: list[int] = []
    pivot_row = 0
    nrows = len(work)
    for col in range(cols):
        hit = -1
        for r in range(pivot_row, nrows):
            if work[r][col]:
                hit = r
                break
        if hit < 0:
            continue
        if hit != pivot_row:
            work[pivot_row], work[hit] = work[hit], work[pivot_row]
            if track is not None:
                track[pivot_row], track[hit] = track[hit], track[pivot_row]
        inv = _ONE / work[pivot_row][col]
        if inv != 1:
            work[pivot_row] = [inv * x for x in work[pivot_row]]
            if track is not None:
                track[pivot_row] = [inv * x for x in track[pivot_row]]
        prow = work[pivot_row]
        for r in range(nrows):
            if r != pivot_row and work[r][col]:
                factor = work[r][col]
                work[r] = [x - factor * p for x, p in zip(work[r], prow)]
                if track is not None:
                    trow = track[pivot_row]
                    track[r] = [x - factor * p for x, p in zip(track[r], trow)]
        pivots.append(col)
        pivot_row += 1
        if pivot_row == nrows:
            break
    return pivots


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and its pivot columns."""
    work = [list(row) for row in m.entries]
    pivots = _gauss_jordan(work, m.cols, None)
    return Matrix(work, cols=m.cols), tuple(pivots)


def rref_with_transform(m: Matrix) -> tuple[Matrix, Matrix, tuple[int, ...]]:
    """As :func:`rref`, plus the invertible row transform T with T @ m = R."""
    work = [list(row) for row in m.entries]
    track = [list(row) for row in Matrix.identity(m.rows).entries]
    pivots = _gauss_jordan(work, m.cols, track)
    return Matrix(work, cols=m.cols), Matrix(track, cols=m.rows), tuple(pivots)


def rank(m: Matrix) -> int:
    work = [list(row) for row in m.entries]
    return len(_gauss_jordan(work, m.cols, None))


def nullspace(m: Matrix) -> list[Vector]:
    """Exact basis of the right kernel, one vector per free column.

    Vectors are produced in increasing free-column order; each has a 1 in its
    free coordinate, so the list is independent by construction and its length
    is cols - rank.
    """
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis: list[Vector] = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        vec = [_ZERO] * m.cols
        vec[free] = _ONE
        for k, p in enumerate(pivots):
            vec[p] = -reduced.entries[k][free]
        basis.append(tuple(vec))
    return basis


def invert(m: Matrix) -> Matrix:
    """Exact inverse via row reduction of the matrix against an identity."""
    if m.rows != m.cols:
        raise NonSquareError(f"cannot invert {m.shape} matrix")
    reduced, transform, pivots = rref_with_transform(m)
    if len(pivots) != m.cols:
        raise SingularMatrixError(f"rank {len(pivots)} < {m.cols}")
    return transform


def rank_normal_transforms(m: Matrix) -> tuple[Matrix, Matrix]:
    """Invertible (P_left, P_right) with P_left @ m @ P_right = diag(I_r, 0).

    P_left is the accumulated row transform of Gauss-Jordan; P_right collects
    the column eliminations clearing the non-pivot columns followed by the
    permutation moving pivot columns to the front.
    """
    reduced, p_left, pivots = rref_with_transform(m)
    work = [list(row) for row in reduced.entries]
    q = [list(row) for row in Matrix.identity(m.cols).entries]
    # Clear non-pivot entries of each pivot row by column operations.  In RREF
    # the pivot column of row k is a standard basis vector, so subtracting
    # work[k][j] times it from column j only changes row k.
    for k, p in enumerate(pivots):
        for j in range(m.cols):
            c = work[k][j]
            if j != p and c:
                for row_w in work:
                    row_w[j] -= c * row_w[p]
                for row_q in q:
                    row_q[j] -= c * row_q[p]
    # Swap pivot columns into the leading positions.
    for k, p in enumerate(pivots):
        if p != k:
            for row_w in work:
                row_w[k], row_w[p] = row_w[p], row_w[k]
            for row_q in q:
                row_q[k], row_q[p] = row_q[p], row_q[k]
    return p_left, Matrix(q, cols=m.cols)


def reduce_against(reduced: Matrix, pivots: tuple[int, ...], vec: Sequence[Fraction]) -> Vector:
    """Residual of ``vec`` after eliminating with precomputed RREF rows.

    The residual is zero exactly when ``vec`` lies in the row span; callers
    doing many membership tests against one subspace reduce each candidate
    against a single RREF instead of re-running elimination per test.
    """
    work = list(vec)
    for k, p in enumerate(pivots):
        c = work[p]
        if c:
            row = reduced.entries[k]
            work = [x - c * r for x, r in zip(work, row)]
    return tuple(work)
