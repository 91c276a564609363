"""Lie algebras on the degree -1 block via a square-zero odd generator.

Fix an odd generator with a single m x n upper-right block b.  Bracketing
twice, x, y |-> [x, [B, y]], closes on the degree -1 block and equips it with
an honest (ungraded) Lie bracket; in block terms the result has lower-left
entry x b y - y b x.  This module builds that algebra concretely on the F_ij
matrix-unit basis: structure constants are obtained by evaluating the raw
double super-commutator on every basis pair, never from a pre-simplified
formula, so the simplified formula stays independently checkable.  A separate
routine produces the simplified table (valid for the normalized generator
diag(I_r, 0)) precisely so the two routes can be compared.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .linalg import Matrix, Vector, invert, rank, rank_normal_transforms
from .supermatrix import (
    Grade,
    ShapeMismatchError,
    SuperMatrix,
    SuperShape,
    grade_of,
    minus_one_basis_element,
    minus_one_basis_labels,
    minus_one_coordinates,
    super_bracket,
)

Label = tuple[int, int]
Terms = tuple[tuple[int, Fraction], ...]
Table = dict[tuple[int, int], Terms]

_ONE = Fraction(1)


class NotDegreeMinusOneError(ValueError):
    """A raw derived-bracket argument was not homogeneous of degree -1."""


class RankOutOfRangeError(ValueError):
    """A generator rank outside 0..min(m, n) was requested."""


class DimensionMismatchError(ValueError):
    """Coordinate data has the wrong length for the algebra at hand."""


def check_rank(shape: SuperShape, r: int) -> None:
    if not 0 <= r <= min(shape.m, shape.n):
        raise RankOutOfRangeError(
            f"rank {r} outside 0..{min(shape.m, shape.n)} for {shape}"
        )


@dataclass(frozen=True)
class OddGenerator:
    """Degree +1 generator, determined by its m x n block ``b``.

    Elements concentrated in the upper-right block square to zero
    automatically, so every instance is a legal bracket generator.
    """

    shape: SuperShape
    b: Matrix

    def __post_init__(self) -> None:
        if self.b.shape != (self.shape.m, self.shape.n):
            raise ShapeMismatchError(
                f"generator block {self.b.shape} does not fit {self.shape}"
            )

    @staticmethod
    def normal(shape: SuperShape, r: int) -> OddGenerator:
        """The normalized generator diag(I_r, 0)."""
        check_rank(shape, r)
        rows = [
            [_ONE if (i == j and i < r) else Fraction(0) for j in range(shape.n)]
            for i in range(shape.m)
        ]
        return OddGenerator(shape, Matrix(rows, cols=shape.n))

    def as_supermatrix(self) -> SuperMatrix:
        return SuperMatrix.from_b_block(self.shape, self.b)

    def rank(self) -> int:
        return rank(self.b)


@dataclass(frozen=True)
class NormalFormCertificate:
    """Invertible (P_m, P_n) with P_m @ b @ P_n = diag(I_r, 0)."""

    shape: SuperShape
    p_m: Matrix
    p_n: Matrix
    b_normal: Matrix
    rank_r: int


def normal_form(gen: OddGenerator) -> NormalFormCertificate:
    """Normalize a generator block to diag(I_r, 0) by exact two-sided transforms."""
    p_left, p_right = rank_normal_transforms(gen.b)
    b_normal = p_left @ gen.b @ p_right
    r = sum(1 for i in range(min(gen.shape.m, gen.shape.n)) if b_normal.entries[i][i])
    return NormalFormCertificate(gen.shape, p_left, p_right, b_normal, r)


def _require_minus_one(x: SuperMatrix, role: str) -> None:
    tag = grade_of(x)
    if not tag.is_zero and tag.grade is not Grade.MINUS_ONE:
        raise NotDegreeMinusOneError(f"{role} argument has grade {tag.grade.value}")


def derived_bracket_raw(x: SuperMatrix, y: SuperMatrix, gen: OddGenerator) -> SuperMatrix:
    """Literal double super-commutator [x, [B, y]] for degree -1 arguments."""
    if x.shape != y.shape or x.shape != gen.shape:
        raise ShapeMismatchError("arguments and generator must share one block shape")
    _require_minus_one(x, "first")
    _require_minus_one(y, "second")
    return super_bracket(x, super_bracket(gen.as_supermatrix(), y))


def _raw_table(gen: OddGenerator) -> Table:
    """Structure constants from the raw bracket on all basis pairs (u < v).

    The inner commutator [B, F_v] depends only on v and is hoisted out of the
    pair loop; each pair still goes through the same two super-commutator
    evaluations as :func:`derived_bracket_raw`.
    """
    shape = gen.shape
    units = [minus_one_basis_element(shape, i, j) for i, j in minus_one_basis_labels(shape)]
    bsm = gen.as_supermatrix()
    inner = [super_bracket(bsm, u) for u in units]
    table: Table = {}
    for v in range(len(units)):
        for u in range(v):
            coords = minus_one_coordinates(super_bracket(units[u], inner[v]))
            terms = tuple((w, c) for w, c in enumerate(coords) if c)
            if terms:
                table[(u, v)] = terms
    return table


@dataclass(frozen=True)
class DerivedAlgebra:
    """A derived-bracket Lie algebra in coordinates on the F_ij basis.

    ``table`` stores the nonzero brackets of basis pairs, keyed by index pairs
    (u, v) with u < v; the (v, u) values follow by antisymmetry and diagonal
    brackets vanish, so neither is stored.
    """

    shape: SuperShape
    rank_r: int
    basis_labels: tuple[Label, ...]
    table: Mapping[tuple[int, int], Terms]

    @property
    def dim(self) -> int:
        return len(self.basis_labels)

    @functools.cached_property
    def _index(self) -> dict[Label, int]:
        return {label: k for k, label in enumerate(self.basis_labels)}

    def index_of(self, label: Label) -> int:
        return self._index[label]

    def bracket_basis(self, u: int, v: int) -> Terms:
        """Bracket of two basis elements, as sparse (index, coeff) terms."""
        if u == v:
            return ()
        if u < v:
            return self.table.get((u, v), ())
        return tuple((w, -c) for w, c in self.table.get((v, u), ()))

    def bracket(self, u: Vector, v: Vector) -> Vector:
        """Bracket of two coordinate vectors (bilinear extension of the table)."""
        if len(u) != self.dim or len(v) != self.dim:
            raise DimensionMismatchError(
                f"expected coordinate length {self.dim}, got {len(u)} and {len(v)}"
            )
        out = [Fraction(0)] * self.dim
        for (a, b), terms in self.table.items():
            coeff = u[a] * v[b] - u[b] * v[a]
            if coeff:
                for w, c in terms:
                    out[w] += coeff * c
        return tuple(out)

    def basis_vector(self, u: int) -> Vector:
        return tuple(_ONE if k == u else Fraction(0) for k in range(self.dim))

    def ad_basis(self, u: int) -> Matrix:
        """Matrix of y |-> bracket(e_u, y) on the basis coordinates."""
        cols: list[list[Fraction]] = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for (a, b), terms in self.table.items():
            if a == u:
                for w, c in terms:
                    cols[b][w] += c
            elif b == u:
                for w, c in terms:
                    cols[a][w] -= c
        return Matrix([[cols[j][i] for j in range(self.dim)] for i in range(self.dim)],
                      cols=self.dim)

    def is_abelian(self) -> bool:
        return not self.table


@functools.lru_cache(maxsize=None)
def build_algebra(shape: SuperShape, r: int) -> DerivedAlgebra:
    """Algebra of the normalized rank-r generator, built from raw brackets."""
    check_rank(shape, r)
    gen = OddGenerator.normal(shape, r)
    return DerivedAlgebra(shape, r, minus_one_basis_labels(shape), _raw_table(gen))


def build_algebra_from_general_B(gen: OddGenerator) -> DerivedAlgebra:
    """Algebra of an arbitrary generator block, built from raw brackets."""
    return DerivedAlgebra(
        gen.shape, gen.rank(), minus_one_basis_labels(gen.shape), _raw_table(gen)
    )


def closed_form_constants(shape: SuperShape, r: int) -> Table:
    """Simplified structure constants for the normalized generator.

    Independent of the raw route: bracket of F_ij and F_kl is
    (j = k <= r) F_il  -  (l = i <= r) F_kj, with the indicated indicator
    coefficients.  Used as the second leg of the table cross-check.
    """
    check_rank(shape, r)
    labels = minus_one_basis_labels(shape)
    index = {label: k for k, label in enumerate(labels)}
    table: Table = {}
    for v, (k, l) in enumerate(labels):
        for u in range(v):
            i, j = labels[u]
            acc: dict[int, Fraction] = {}
            if j <= r and j == k:
                w = index[(i, l)]
                acc[w] = acc.get(w, Fraction(0)) + 1
            if l <= r and l == i:
                w = index[(k, j)]
                acc[w] = acc.get(w, Fraction(0)) - 1
            terms = tuple((w, c) for w, c in sorted(acc.items()) if c)
            if terms:
                table[(u, v)] = terms
    return table


# -- serialization ---------------------------------------------------------


def label_string(label: Label) -> str:
    return f"F_{label[0]}_{label[1]}"


def parse_label(text: str) -> Label:
    parts = text.split("_")
    if len(parts) != 3 or parts[0] != "F":
        raise ValueError(f"malformed basis label {text!r}")
    return (int(parts[1]), int(parts[2]))


def algebra_to_dict(algebra: DerivedAlgebra) -> dict:
    """JSON-ready record: basis labels plus sparse bracket table.

    Coefficients are exact "numerator/denominator" strings; bracket entries
    appear only for index pairs u < v with a nonzero result.
    """
    labels = algebra.basis_labels
    brackets = []
    for (u, v) in sorted(algebra.table):
        brackets.append(
            {
                "left": label_string(labels[u]),
                "right": label_string(labels[v]),
                "terms": [
                    {
                        "basis": label_string(labels[w]),
                        "coeff": f"{c.numerator}/{c.denominator}",
                    }
                    for w, c in algebra.table[(u, v)]
                ],
            }
        )
    return {
        "m": algebra.shape.m,
        "n": algebra.shape.n,
        "r": algebra.rank_r,
        "basis": [label_string(label) for label in labels],
        "brackets": brackets,
    }


def algebra_from_dict(record: dict) -> DerivedAlgebra:
    """Rebuild an algebra from :func:`algebra_to_dict` output (exact round trip)."""
    shape = SuperShape(int(record["m"]), int(record["n"]))
    r = int(record["r"])
    check_rank(shape, r)
    labels = tuple(parse_label(text) for text in record["basis"])
    if labels != minus_one_basis_labels(shape):
        raise ValueError("basis labels are not the canonical lexicographic list")
    index = {label: k for k, label in enumerate(labels)}
    table: Table = {}
    for entry in record["brackets"]:
        u = index[parse_label(entry["left"])]
        v = index[parse_label(entry["right"])]
        if not u < v:
            raise ValueError(f"bracket pair out of canonical order: {entry['left']}, {entry['right']}")
        if (u, v) in table:
            raise ValueError(f"duplicate bracket pair {entry['left']}, {entry['right']}")
        terms = tuple(
            (index[parse_label(term["basis"])], Fraction(term["coeff"]))
            for term in entry["terms"]
        )
        if any(not c for _, c in terms):
            raise ValueError("explicit zero coefficient in terms")
        table[(u, v)] = terms
    return DerivedAlgebra(shape, r, labels, table)
