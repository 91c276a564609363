"""Block matrices of gl(m|n): grading conventions and the super bracket.

Elements are (m+n) x (m+n) matrices split into four blocks::

    [ A  B ]      A: m x m    B: m x n
    [ C  D ]      C: n x m    D: n x n

Two gradings coexist.  The Z2-grading declares A, D even and B, C odd; the
compatible short Z-grading assigns degree -1 to the C block, degree 0 to A and
D, and degree +1 to the B block.  The super bracket is

    [X, Y] = X Y - Y X        unless X and Y are both odd,
    [X, Y] = X Y + Y X        when X and Y are both odd,

extended bilinearly to inhomogeneous arguments via their even/odd parts.
Degree -1 elements are coordinatized on the matrix units F_ij (single 1 in the
C block at row i, column j, both 1-based), ordered lexicographically by
(i, j) - i.e. row-major in the C block.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from typing import NamedTuple

from .linalg import Fraction, Matrix, Vector


class ShapeMismatchError(ValueError):
    """Operands live in differently sized block matrix algebras."""


@dataclass(frozen=True, order=True)
class SuperShape:
    """Block sizes (m, n) of gl(m|n); both must be positive."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise ValueError(f"block sizes must be >= 1, got ({self.m}, {self.n})")

    @property
    def total(self) -> int:
        return self.m + self.n

    def flipped(self) -> SuperShape:
        return SuperShape(self.n, self.m)

    def __str__(self) -> str:
        return f"gl({self.m}|{self.n})"


class Grade(enum.Enum):
    """Homogeneity tags, from finest (Z-degrees) to coarsest (mixed)."""

    MINUS_ONE = "minus_one"
    ZERO = "zero"
    PLUS_ONE = "plus_one"
    EVEN = "even"
    ODD = "odd"
    MIXED = "mixed"


class GradeTag(NamedTuple):
    """Finest applicable grade plus an explicit flag for the zero matrix.

    The zero matrix is homogeneous of every degree; it is reported as
    (MINUS_ONE, True) so callers branch on ``is_zero`` rather than on an
    arbitrary-looking tag.
    """

    grade: Grade
    is_zero: bool


@dataclass(frozen=True)
class SuperMatrix:
    """One element of gl(m|n), stored blockwise with exact rational entries."""

    shape: SuperShape
    a: Matrix
    b: Matrix
    c: Matrix
    d: Matrix

    def __post_init__(self) -> None:
        m, n = self.shape.m, self.shape.n
        expected = {"a": (m, m), "b": (m, n), "c": (n, m), "d": (n, n)}
        for name, want in expected.items():
            got = getattr(self, name).shape
            if got != want:
                raise ShapeMismatchError(f"block {name} has shape {got}, expected {want}")

    @classmethod
    def _trusted(
        cls, shape: SuperShape, a: Matrix, b: Matrix, c: Matrix, d: Matrix
    ) -> SuperMatrix:
        """Internal constructor for blocks already known to fit ``shape``."""
        out = object.__new__(cls)
        object.__setattr__(out, "shape", shape)
        object.__setattr__(out, "a", a)
        object.__setattr__(out, "b", b)
        object.__setattr__(out, "c", c)
        object.__setattr__(out, "d", d)
        return out

    @staticmethod
    @functools.lru_cache(maxsize=None)
    def zero(shape: SuperShape) -> SuperMatrix:
        m, n = shape.m, shape.n
        return SuperMatrix(
            shape, Matrix.zeros(m, m), Matrix.zeros(m, n), Matrix.zeros(n, m), Matrix.zeros(n, n)
        )

    @staticmethod
    def from_c_block(shape: SuperShape, c: Matrix) -> SuperMatrix:
        """Degree -1 element with the given n x m lower-left block."""
        z = SuperMatrix.zero(shape)
        return SuperMatrix(shape, z.a, z.b, c, z.d)

    @staticmethod
    def from_b_block(shape: SuperShape, b: Matrix) -> SuperMatrix:
        """Degree +1 element with the given m x n upper-right block."""
        z = SuperMatrix.zero(shape)
        return SuperMatrix(shape, z.a, b, z.c, z.d)

    # -- linear structure --------------------------------------------------

    def _check_same_shape(self, other: SuperMatrix) -> None:
        if self.shape != other.shape:
            raise ShapeMismatchError(f"{self.shape} vs {other.shape}")

    def __add__(self, other: SuperMatrix) -> SuperMatrix:
        self._check_same_shape(other)
        return SuperMatrix._trusted(
            self.shape, self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d
        )

    def __sub__(self, other: SuperMatrix) -> SuperMatrix:
        self._check_same_shape(other)
        return SuperMatrix._trusted(
            self.shape, self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d
        )

    def __neg__(self) -> SuperMatrix:
        return SuperMatrix._trusted(self.shape, -self.a, -self.b, -self.c, -self.d)

    def scaled(self, coeff: int | Fraction) -> SuperMatrix:
        return SuperMatrix._trusted(
            self.shape,
            self.a.scaled(coeff),
            self.b.scaled(coeff),
            self.c.scaled(coeff),
            self.d.scaled(coeff),
        )

    def __matmul__(self, other: SuperMatrix) -> SuperMatrix:
        """Ordinary (associative) matrix product, computed blockwise."""
        self._check_same_shape(other)
        return SuperMatrix._trusted(
            self.shape,
            self.a @ other.a + self.b @ other.c,
            self.a @ other.b + self.b @ other.d,
            self.c @ other.a + self.d @ other.c,
            self.c @ other.b + self.d @ other.d,
        )

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero() and self.c.is_zero() and self.d.is_zero()

    def even_part(self) -> SuperMatrix:
        z = SuperMatrix.zero(self.shape)
        return SuperMatrix._trusted(self.shape, self.a, z.b, z.c, self.d)

    def odd_part(self) -> SuperMatrix:
        z = SuperMatrix.zero(self.shape)
        return SuperMatrix._trusted(self.shape, z.a, self.b, self.c, z.d)

    def to_dense(self) -> Matrix:
        """Assemble the full (m+n) x (m+n) matrix (used for cross-checks)."""
        m, n = self.shape.m, self.shape.n
        rows = []
        for i in range(m):
            rows.append(list(self.a.row(i)) + list(self.b.row(i)))
        for i in range(n):
            rows.append(list(self.c.row(i)) + list(self.d.row(i)))
        return Matrix(rows, cols=m + n)

    @staticmethod
    def from_dense(shape: SuperShape, dense: Matrix) -> SuperMatrix:
        m, n = shape.m, shape.n
        if dense.shape != (m + n, m + n):
            raise ShapeMismatchError(f"dense shape {dense.shape} vs {(m + n, m + n)}")
        sub = lambda r0, r1, c0, c1: Matrix(
            [dense.row(i)[c0:c1] for i in range(r0, r1)], cols=c1 - c0
        )
        return SuperMatrix(
            shape,
            sub(0, m, 0, m),
            sub(0, m, m, m + n),
            sub(m, m + n, 0, m),
            sub(m, m + n, m, m + n),
        )


def super_bracket(x: SuperMatrix, y: SuperMatrix) -> SuperMatrix:
    """Super commutator, bilinear in both arguments.

    Homogeneous rule: commutator XY - YX except on two odd arguments, where it
    is the anticommutator XY + YX.  Inhomogeneous arguments are split into
    even and odd parts first.
    """
    if x.shape != y.shape:
        raise ShapeMismatchError(f"{x.shape} vs {y.shape}")
    x_even = x.b.is_zero() and x.c.is_zero()
    x_odd = x.a.is_zero() and x.d.is_zero()
    y_even = y.b.is_zero() and y.c.is_zero()
    y_odd = y.a.is_zero() and y.d.is_zero()
    if (x_even and x_odd) or (y_even and y_odd):
        return SuperMatrix.zero(x.shape)
    if (x_even or x_odd) and (y_even or y_odd):
        # homogeneous pair: only half the blocks of XY +- YX can be nonzero,
        # so compute those four products directly
        z = SuperMatrix.zero(x.shape)
        if x_even and y_even:
            return SuperMatrix._trusted(
                x.shape, x.a @ y.a - y.a @ x.a, z.b, z.c, x.d @ y.d - y.d @ x.d
            )
        if x_even:
            return SuperMatrix._trusted(
                x.shape, z.a, x.a @ y.b - y.b @ x.d, x.d @ y.c - y.c @ x.a, z.d
            )
        if y_even:
            return SuperMatrix._trusted(
                x.shape, z.a, x.b @ y.d - y.a @ x.b, x.c @ y.a - y.d @ x.c, z.d
            )
        return SuperMatrix._trusted(
            x.shape, x.b @ y.c + y.b @ x.c, z.b, z.c, x.c @ y.b + y.c @ x.b
        )
    result = SuperMatrix.zero(x.shape)
    xe, xo = x.even_part(), x.odd_part()
    ye, yo = y.even_part(), y.odd_part()
    for u, v, both_odd in ((xe, ye, False), (xe, yo, False), (xo, ye, False), (xo, yo, True)):
        if u.is_zero() or v.is_zero():
            continue
        uv = u @ v
        vu = v @ u
        result = result + (uv + vu if both_odd else uv - vu)
    return result


def z_component(x: SuperMatrix, degree: int) -> SuperMatrix:
    """Projection onto the Z-degree ``degree`` part (degree in {-1, 0, 1})."""
    if degree == -1:
        return SuperMatrix.from_c_block(x.shape, x.c)
    if degree == 0:
        z = SuperMatrix.zero(x.shape)
        return SuperMatrix(x.shape, x.a, z.b, z.c, x.d)
    if degree == 1:
        return SuperMatrix.from_b_block(x.shape, x.b)
    raise ValueError(f"degree must be -1, 0 or 1, got {degree}")


def grade_of(x: SuperMatrix) -> GradeTag:
    """Finest homogeneity tag of ``x`` plus the explicit zero flag."""
    has_a = not x.a.is_zero()
    has_b = not x.b.is_zero()
    has_c = not x.c.is_zero()
    has_d = not x.d.is_zero()
    diag = has_a or has_d
    if not (diag or has_b or has_c):
        return GradeTag(Grade.MINUS_ONE, True)
    if has_c and not (diag or has_b):
        return GradeTag(Grade.MINUS_ONE, False)
    if has_b and not (diag or has_c):
        return GradeTag(Grade.PLUS_ONE, False)
    if diag and not (has_b or has_c):
        return GradeTag(Grade.ZERO, False)
    if has_b and has_c and not diag:
        return GradeTag(Grade.ODD, False)
    return GradeTag(Grade.MIXED, False)


# -- degree -1 coordinates -------------------------------------------------


def minus_one_basis_labels(shape: SuperShape) -> tuple[tuple[int, int], ...]:
    """Labels (i, j) of the F_ij basis, 1-based, lexicographic in (i, j)."""
    return tuple((i, j) for i in range(1, shape.n + 1) for j in range(1, shape.m + 1))


def minus_one_basis_element(shape: SuperShape, i: int, j: int) -> SuperMatrix:
    """The basis element F_ij: a single 1 in the C block at (row i, col j)."""
    if not (1 <= i <= shape.n and 1 <= j <= shape.m):
        raise ValueError(f"basis label ({i}, {j}) out of range for {shape}")
    return SuperMatrix.from_c_block(shape, Matrix.unit(shape.n, shape.m, i - 1, j - 1))

def minus_one_coordinates(x: SuperMatrix) -> Vector:
    """Coordinates of the degree -1 part of ``x`` on the F_ij basis."""
    return tuple(entry for row in x.c.entries for entry in row)


def minus_one_from_coordinates(shape: SuperShape, coords: Vector) -> SuperMatrix:
    """Inverse of :func:`minus_one_coordinates` for a degree -1 element."""
    n, m = shape.n, shape.m
    if len(coords) != m * n:
        raise ValueError(f"expected {m * n} coordinates, got {len(coords)}")
    rows = [coords[i * m : (i + 1) * m] for i in range(n)]
    return SuperMatrix.from_c_block(shape, Matrix(rows, cols=m))
