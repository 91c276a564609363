"""Isomorphism decisions between derived-bracket algebras, with evidence.

Two normalized algebras on shapes (m, n) and (p, q) with generator ranks
r1, r2 >= 1 are isomorphic exactly when r1 = r2 and {m, n} = {p, q}; the
abelian cases (rank 0, or the one-dimensional (1,1) algebras) are classified
by dimension alone.  Verdicts are constructive: a positive answer carries an
invertible coordinate map (identity, or the corner flip F_ij -> -F_ji into
the size-swapped algebra), a negative answer names the first invariant that
separates the two sides.  Nothing here is trusted blind - the witness can be
replayed through ``verify_homomorphism`` and the separator values re-derived
by the brute-force routes of :mod:`dbalg.structure`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .derived import (
    DerivedAlgebra,
    DimensionMismatchError,
    NormalFormCertificate,
    OddGenerator,
    check_rank,
    normal_form,
)
from .linalg import Matrix, Vector, invert, rank
from .structure import decomposition_report
from .supermatrix import SuperMatrix, SuperShape, minus_one_basis_labels

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True, order=True)
class AlgebraSpec:
    """Normalized description (m, n, r) of one derived-bracket algebra."""

    m: int
    n: int
    r: int

    def __post_init__(self) -> None:
        check_rank(SuperShape(self.m, self.n), self.r)

    @property
    def shape(self) -> SuperShape:
        return SuperShape(self.m, self.n)

    @property
    def dim(self) -> int:
        return self.m * self.n

    def __str__(self) -> str:
        return f"gl({self.m}|{self.n}) rank {self.r}"


@dataclass(frozen=True)
class LinearMap:
    """Linear map between coordinate spaces; ``matrix`` is target x source."""

    source_dim: int
    target_dim: int
    matrix: Matrix

    def __post_init__(self) -> None:
        if self.matrix.shape != (self.target_dim, self.source_dim):
            raise DimensionMismatchError(
                f"matrix shape {self.matrix.shape} != ({self.target_dim}, {self.source_dim})"
            )

    @staticmethod
    def identity(dim: int) -> LinearMap:
        return LinearMap(dim, dim, Matrix.identity(dim))

    def apply(self, vec: Sequence[Fraction]) -> Vector:
        if len(vec) != self.source_dim:
            raise DimensionMismatchError(f"vector length {len(vec)} != {self.source_dim}")
        return tuple(
            sum((row[j] * vec[j] for j in range(self.source_dim) if vec[j]), _ZERO)
            for row in self.matrix.entries
        )

    def compose(self, inner: LinearMap) -> LinearMap:
        """self after inner."""
        if inner.target_dim != self.source_dim:
            raise DimensionMismatchError("composition dimensions do not match")
        return LinearMap(inner.source_dim, self.target_dim, self.matrix @ inner.matrix)

    def is_invertible(self) -> bool:
        return self.source_dim == self.target_dim and rank(self.matrix) == self.source_dim


class Invariants(NamedTuple):
    """Invariant tuple reported per algebra (closed-form values)."""

    abelian: bool
    dim: int
    dim_center: int
    dim_levi: int


@dataclass(frozen=True)
class Separator:
    """Named invariant whose two values differ, certifying non-isomorphism."""

    invariant: str
    left_value: bool | int
    right_value: bool | int


@dataclass(frozen=True)
class ClassificationVerdict:
    """Outcome of one comparison: exactly one of witness / separator is set."""

    left: AlgebraSpec
    right: AlgebraSpec
    isomorphic: bool
    witness: LinearMap | None
    witness_kind: str | None
    separator: Separator | None
    note: str | None = None

    def __post_init__(self) -> None:
        if self.isomorphic != (self.witness is not None) or self.isomorphic == (
            self.separator is not None
        ):
            raise ValueError("verdict must carry exactly one of witness/separator")


def invariants_of(spec: AlgebraSpec) -> Invariants:
    report = decomposition_report(spec.shape, spec.r)
    return Invariants(
        abelian=report.is_abelian,
        dim=report.dim_total,
        dim_center=report.dim_center,
        dim_levi=report.dim_levi,
    )


# -- witness constructions -------------------------------------------------


def conjugation_iso(gen: OddGenerator) -> LinearMap:
    """Coordinate map x -> P_n^-1 x P_m^-1 normalizing a general generator.

    Columns are the coordinates of the transformed basis units; the result
    maps the algebra of ``gen`` isomorphically onto the algebra of the
    normalized generator of the same rank.
    """
    cert = normal_form(gen)
    shape = gen.shape
    pm_inv = invert(cert.p_m)
    pn_inv = invert(cert.p_n)
    labels = minus_one_basis_labels(shape)
    dim = len(labels)
    columns: list[Vector] = []
    for i, j in labels:
        image = pn_inv @ Matrix.unit(shape.n, shape.m, i - 1, j - 1) @ pm_inv
        columns.append(tuple(entry for row in image.entries for entry in row))
    matrix = Matrix([[columns[j][i] for j in range(dim)] for i in range(dim)], cols=dim)
    return LinearMap(dim, dim, matrix)


def conjugate_supermatrix(cert: NormalFormCertificate, x: SuperMatrix) -> SuperMatrix:
    """Whole-algebra conjugation by diag(P_m, P_n^-1) from a normal form.

    Restricted to degree -1 this is the map of :func:`conjugation_iso`; the
    degree +1 block transforms as b -> P_m b P_n, carrying the generator to
    its normal form.
    """
    pm_inv = invert(cert.p_m)
    pn_inv = invert(cert.p_n)
    return SuperMatrix(
        x.shape,
        cert.p_m @ x.a @ pm_inv,
        cert.p_m @ x.b @ cert.p_n,
        pn_inv @ x.c @ pm_inv,
        pn_inv @ x.d @ cert.p_n,
    )


def flip_iso(shape: SuperShape, r: int) -> LinearMap:
    """Coordinate map F_ij -> -F_ji onto the size-swapped rank-r algebra.

    The sign comes from transposing an off-diagonal block inside a
    supertranspose; kept so the map matches that construction exactly.  The
    matrix itself does not depend on r, but the rank is validated so the map
    is only issued for an algebra pair that exists.
    """
    check_rank(shape, r)
    source_labels = minus_one_basis_labels(shape)
    target_labels = minus_one_basis_labels(shape.flipped())
    target_index = {label: k for k, label in enumerate(target_labels)}
    dim = len(source_labels)
    rows = [[_ZERO] * dim for _ in range(dim)]
    for s, (i, j) in enumerate(source_labels):
        rows[target_index[(j, i)]][s] = -_ONE
    return LinearMap(dim, dim, Matrix(rows, cols=dim))


def flip_superalgebra(x: SuperMatrix) -> SuperMatrix:
    """Conjugation by the block-swap permutation: gl(m|n) -> gl(n|m).

    Blocks move as (A, B; C, D) -> (D, C; B, A); an algebra map of ordinary
    matrices, and even/odd parts are preserved.
    """
    return SuperMatrix(x.shape.flipped(), x.d, x.c, x.b, x.a)


def supertranspose(x: SuperMatrix) -> SuperMatrix:
    """Graded transpose (A, B; C, D) -> (A^t, C^t; -B^t, D^t).

    An antiautomorphism for the super bracket: it reverses products up to the
    grading sign, so composing it with the block swap yields degree-respecting
    isomorphisms between the two corner algebras.
    """
    return SuperMatrix(
        x.shape,
        x.a.transpose(),
        x.c.transpose(),
        -(x.b.transpose()),
        x.d.transpose(),
    )


def verify_homomorphism(
    f: LinearMap, source: DerivedAlgebra, target: DerivedAlgebra
) -> bool:
    """Replay a claimed isomorphism: invertibility plus bracket preservation.

    Checks f(bracket(e_u, e_v)) = bracket(f e_u, f e_v) on every basis pair of
    the source.  Dimension mismatches between ``f`` and the algebras raise;
    a non-invertible map simply fails the check.
    """
    if f.source_dim != source.dim or f.target_dim != target.dim:
        raise DimensionMismatchError("map dimensions do not match the algebras")
    if not f.is_invertible():
        return False
    images = [f.matrix.column(u) for u in range(source.dim)]
    for u in range(source.dim):
        for v in range(u + 1, source.dim):
            lhs = [_ZERO] * target.dim
            for w, c in source.bracket_basis(u, v):
                col = images[w]
                for t in range(target.dim):
                    if col[t]:
                        lhs[t] += c * col[t]
            if tuple(lhs) != target.bracket(images[u], images[v]):
                return False
    return True


# -- the decision procedure ------------------------------------------------

_ABELIAN_NOTE = (
    "abelian case: decided by dimension alone "
    "(extension of the rank >= 1 classification)"
)


def iso_decision(left: AlgebraSpec, right: AlgebraSpec) -> ClassificationVerdict:
    """Decide isomorphism of two normalized algebras, with evidence.

    Non-abelian pairs are isomorphic exactly when the ranks agree and the
    block sizes agree as unordered pairs; the witness is the identity (same
    ordered sizes) or the corner flip (swapped sizes).  Abelian algebras are
    isomorphic exactly when their dimensions agree.  Negative verdicts name
    the first differing invariant in the fixed order: abelian flag, total
    dimension, Levi dimension, center dimension.
    """
    inv_l = invariants_of(left)
    inv_r = invariants_of(right)

    def separated(name: str, lv: bool | int, rv: bool | int, note: str | None = None):
        return ClassificationVerdict(
            left, right, False, None, None, Separator(name, lv, rv), note
        )

    if inv_l.abelian and inv_r.abelian:
        if inv_l.dim == inv_r.dim:
            return ClassificationVerdict(
                left, right, True, LinearMap.identity(inv_l.dim),
                "identity", None, _ABELIAN_NOTE,
            )
        return separated("dim_total", inv_l.dim, inv_r.dim, _ABELIAN_NOTE)

    if inv_l.abelian != inv_r.abelian:
        return separated("abelian", inv_l.abelian, inv_r.abelian, _ABELIAN_NOTE)

    if left.r == right.r and {left.m, left.n} == {right.m, right.n}:
        if (left.m, left.n) == (right.m, right.n):
            return ClassificationVerdict(
                left, right, True, LinearMap.identity(inv_l.dim), "identity", None
            )
        return ClassificationVerdict(
            left, right, True, flip_iso(left.shape, left.r), "flip", None
        )

    for name, lv, rv in (
        ("dim_total", inv_l.dim, inv_r.dim),
        ("dim_levi", inv_l.dim_levi, inv_r.dim_levi),
        ("dim_center", inv_l.dim_center, inv_r.dim_center),
    ):
        if lv != rv:
            return separated(name, lv, rv)
    raise AssertionError(
        f"non-isomorphic pair {left} vs {right} with equal invariant tuple"
    )
