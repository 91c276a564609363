"""Structure theory of the derived-bracket algebras: center, radical, Levi part.

Every quantity here is available twice, by design:

* closed forms on the F_ij grid — the scalar line plus the outside-the-corner
  units span the radical, the traceless upper-left r x r patterns form a Levi
  subalgebra isomorphic to sl(r), and the center is read off a three-way case
  split on how the rank r compares to the block sizes;
* brute-force routes that know nothing of those formulas — the center as the
  nullspace of all stacked adjoint matrices, solvability through the derived
  series, and the radical as the Killing-orthogonal complement of the derived
  subalgebra (Cartan's criterion, valid in characteristic zero).

``verify_levi_decomposition`` runs the full battery of cross-checks and raises
on the first mismatch, so agreement of the two routes is machine-checked, not
assumed.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .derived import (
    DerivedAlgebra,
    RankOutOfRangeError,
    Table,
    Terms,
    build_algebra,
    check_rank,
)
from .linalg import Matrix, Vector, invert, nullspace, rank, reduce_against, rref
from .supermatrix import SuperShape, minus_one_basis_labels

_ZERO = Fraction(0)
_ONE = Fraction(1)


class NotASubalgebraError(ValueError):
    """derived_series was started from a subspace not closed under the bracket."""


class VerificationFailureError(RuntimeError):
    """A decomposition cross-check failed; ``check`` names the first failure."""

    def __init__(self, check: str, detail: str):
        super().__init__(f"{check}: {detail}")
        self.check = check
        self.detail = detail


# -- subspaces -------------------------------------------------------------


@dataclass(frozen=True)
class Subspace:
    """Subspace of coordinate space, held as an independent list of vectors."""

    ambient_dim: int
    basis: tuple[Vector, ...]

    def __post_init__(self) -> None:
        for vec in self.basis:
            if len(vec) != self.ambient_dim:
                raise ValueError(f"vector length {len(vec)} != ambient {self.ambient_dim}")
        if rank(Matrix.from_rows(self.basis, self.ambient_dim)) != len(self.basis):
            raise ValueError("basis vectors are linearly dependent")

    @property
    def dim(self) -> int:
        return len(self.basis)

    @functools.cached_property
    def _reduced(self) -> tuple[Matrix, tuple[int, ...]]:
        return rref(Matrix.from_rows(self.basis, self.ambient_dim))

    def contains(self, vec: Sequence[Fraction]) -> bool:
        """Membership by elimination: the residual against the RREF is zero."""
        reduced, pivots = self._reduced
        return not any(reduce_against(reduced, pivots, vec))

    def contains_all(self, vectors: Iterable[Sequence[Fraction]]) -> bool:
        return all(self.contains(vec) for vec in vectors)

    def contains_subspace(self, other: Subspace) -> bool:
        return self.ambient_dim == other.ambient_dim and self.contains_all(other.basis)

    @staticmethod
    def span(ambient_dim: int, vectors: Sequence[Sequence[Fraction]]) -> Subspace:
        """Canonical subspace spanned by arbitrary vectors (RREF row basis)."""
        reduced, pivots = rref(Matrix.from_rows(vectors, ambient_dim))
        return Subspace(ambient_dim, tuple(reduced.row(k) for k in range(len(pivots))))

    @staticmethod
    def zero(ambient_dim: int) -> Subspace:
        return Subspace(ambient_dim, ())

    @staticmethod
    def full(ambient_dim: int) -> Subspace:
        return Subspace(ambient_dim, tuple(Matrix.identity(ambient_dim).entries))


def spans_equal(left: Subspace, right: Subspace) -> bool:
    """Equality as subspaces, decided by double inclusion (never basis equality)."""
    return left.contains_subspace(right) and right.contains_subspace(left)


# -- bilinear forms --------------------------------------------------------


@dataclass(frozen=True)
class BilinearForm:
    """Symmetric bilinear form given by its Gram matrix on the working basis."""

    dim: int
    gram: Matrix

    def __post_init__(self) -> None:
        if self.gram.shape != (self.dim, self.dim):
            raise ValueError(f"gram shape {self.gram.shape} != ({self.dim}, {self.dim})")

    def value(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        acc = _ZERO
        for i, ui in enumerate(u):
            if ui:
                row = self.gram.entries[i]
                acc += ui * sum((row[j] * vj for j, vj in enumerate(v) if vj), _ZERO)
        return acc

    def rank(self) -> int:
        return rank(self.gram)

    def is_nondegenerate(self) -> bool:
        return self.rank() == self.dim

    def kernel(self) -> list[Vector]:
        return nullspace(self.gram)


# -- reports ---------------------------------------------------------------


@dataclass(frozen=True)
class DecompositionReport:
    """Dimension summary of one algebra: total = Levi + radical, plus flags."""

    shape: SuperShape
    rank_r: int
    dim_total: int
    dim_levi: int
    dim_radical: int
    dim_center: int
    is_abelian: bool
    is_solvable: bool

    @property
    def levi_type(self) -> str:
        return f"sl({self.rank_r})" if self.rank_r >= 2 else "0"

    def to_dict(self) -> dict:
        return {
            "m": self.shape.m,
            "n": self.shape.n,
            "r": self.rank_r,
            "dim_total": self.dim_total,
            "dim_levi": self.dim_levi,
            "dim_radical": self.dim_radical,
            "dim_center": self.dim_center,
            "is_abelian": self.is_abelian,
            "is_solvable": self.is_solvable,
            "levi_type": self.levi_type,
        }


def decomposition_report(shape: SuperShape, r: int) -> DecompositionReport:
    """Closed-form dimension report (cross-checked by verify_levi_decomposition)."""
    check_rank(shape, r)
    m, n = shape.m, shape.n
    dim = m * n
    dim_levi = r * r - 1 if r >= 1 else 0
    if r == 0:
        dim_center = dim
    elif r == m == n:
        dim_center = 1
    elif r < m and r < n:
        dim_center = (m - r) * (n - r)
    else:
        dim_center = 0
    return DecompositionReport(
        shape=shape,
        rank_r=r,
        dim_total=dim,
        dim_levi=dim_levi,
        dim_radical=dim - dim_levi,
        dim_center=dim_center,
        is_abelian=(r == 0 or (m == 1 and n == 1)),
        is_solvable=(r <= 1),
    )


# -- closed-form subspaces -------------------------------------------------


def _unit_vector(dim: int, k: int) -> Vector:
    return tuple(_ONE if i == k else _ZERO for i in range(dim))


def _scalar_line_vector(shape: SuperShape, r: int) -> Vector:
    """Coordinates of the sum of F_ii over i <= r (the scalar pattern)."""
    labels = minus_one_basis_labels(shape)
    hits = {k for k, (i, j) in enumerate(labels) if i == j and i <= r}
    return tuple(_ONE if k in hits else _ZERO for k in range(len(labels)))


def center_closed_form(shape: SuperShape, r: int) -> Subspace:
    """Center by the three-way case split on r versus the block sizes.

    r = m = n gives the scalar line; r below both sizes gives the units
    strictly outside the top-left corner in both indices; r equal to exactly
    one size gives the zero space.  r = 0 returns the whole space (abelian).
    """
    check_rank(shape, r)
    labels = minus_one_basis_labels(shape)
    dim = len(labels)
    if r == 0:
        return Subspace.full(dim)
    if r == shape.m == shape.n:
        return Subspace(dim, (_scalar_line_vector(shape, r),))
    if r < shape.m and r < shape.n:
        basis = tuple(
            _unit_vector(dim, k) for k, (i, j) in enumerate(labels) if i > r and j > r
        )
        return Subspace(dim, basis)
    return Subspace.zero(dim)


def radical_closed_form(shape: SuperShape, r: int) -> Subspace:
    """Radical pattern: scalar line plus every unit leaving the r x r corner.

    Only defined for r >= 1; at r = 0 the radical is the whole (abelian)
    algebra and the caller is expected to branch rather than call this.
    """
    check_rank(shape, r)
    if r == 0:
        raise RankOutOfRangeError("rank 0 radical is the whole space; handle it in the caller")
    labels = minus_one_basis_labels(shape)
    dim = len(labels)
    basis = [_scalar_line_vector(shape, r)]
    basis.extend(
        _unit_vector(dim, k) for k, (i, j) in enumerate(labels) if i > r or j > r
    )
    return Subspace(dim, tuple(basis))


def levi_closed_form(shape: SuperShape, r: int) -> Subspace:
    """Levi pattern: traceless combinations inside the top-left r x r corner."""
    check_rank(shape, r)
    labels = minus_one_basis_labels(shape)
    index = {label: k for k, label in enumerate(labels)}
    dim = len(labels)
    basis: list[Vector] = [
        _unit_vector(dim, k) for k, (i, j) in enumerate(labels) if i != j and i <= r and j <= r
    ]
    for i in range(1, r):
        vec = [_ZERO] * dim
        vec[index[(i, i)]] = _ONE
        vec[index[(i + 1, i + 1)]] = -_ONE
        basis.append(tuple(vec))
    return Subspace(dim, tuple(basis))


# -- brute-force routes ----------------------------------------------------


def center_bruteforce(algebra: DerivedAlgebra) -> Subspace:
    """Center as the joint nullspace of all basis adjoint matrices."""
    dim = algebra.dim
    rows: list[Vector] = []
    for u in range(dim):
        rows.extend(algebra.ad_basis(u).entries)
    kernel = nullspace(Matrix.from_rows(rows, dim))
    return Subspace.span(dim, kernel)


def derived_subspace(algebra: DerivedAlgebra, space: Subspace) -> Subspace:
    """Span of all brackets of pairs of basis vectors of ``space``."""
    vecs = [
        algebra.bracket(space.basis[i], space.basis[j])
        for i, j in itertools.combinations(range(space.dim), 2)
    ]
    return Subspace.span(space.ambient_dim, vecs)


def derived_series(algebra: DerivedAlgebra, space: Subspace) -> list[Subspace]:
    """Derived series of a subalgebra, listed until it stabilizes.

    The starting subspace must be closed under the bracket; each later term
    automatically is.  The final entry is the stable term (zero exactly when
    the subalgebra is solvable) and appears once.
    """
    for i, j in itertools.combinations(range(space.dim), 2):
        if not space.contains(algebra.bracket(space.basis[i], space.basis[j])):
            raise NotASubalgebraError(
                f"bracket of basis vectors {i}, {j} leaves the subspace"
            )
    series = [space]
    current = space
    while True:
        nxt = derived_subspace(algebra, current)
        if nxt.dim == current.dim:
            break
        series.append(nxt)
        current = nxt
    return series


def is_solvable(algebra: DerivedAlgebra, space: Subspace) -> bool:
    return derived_series(algebra, space)[-1].dim == 0


def _sparse_ad_maps(dim: int, table: Table) -> list[dict[tuple[int, int], Fraction]]:
    """Adjoint matrices of all basis elements, as sparse (row, col) -> value maps."""
    maps: list[dict[tuple[int, int], Fraction]] = [dict() for _ in range(dim)]
    for (a, b), terms in table.items():
        for w, c in terms:
            maps[a][(w, b)] = maps[a].get((w, b), _ZERO) + c
            maps[b][(w, a)] = maps[b].get((w, a), _ZERO) - c
    return maps


def _gram_from_table(dim: int, table: Table) -> Matrix:
    """Gram matrix of trace(ad_u ad_v) for the bracket given by ``table``."""
    maps = _sparse_ad_maps(dim, table)
    gram = [[_ZERO] * dim for _ in range(dim)]
    for u in range(dim):
        for v in range(u, dim):
            acc = _ZERO
            for (i, k), val in maps[u].items():
                other = maps[v].get((k, i))
                if other is not None:
                    acc += val * other
            gram[u][v] = acc
            gram[v][u] = acc
    return Matrix(gram, cols=dim)


def killing_form(algebra: DerivedAlgebra) -> BilinearForm:
    """Killing form trace(ad x . ad y) on the basis coordinates."""
    return BilinearForm(algebra.dim, _gram_from_table(algebra.dim, dict(algebra.table)))


def radical_via_killing(algebra: DerivedAlgebra) -> Subspace:
    """Radical as the Killing-orthogonal complement of the derived subalgebra.

    Cartan's criterion over the rationals; this route never consults the
    closed-form radical pattern.
    """
    dim = algebra.dim
    derived_vectors: list[Vector] = []
    for terms in algebra.table.values():
        vec = [_ZERO] * dim
        for w, c in terms:
            vec[w] += c
        derived_vectors.append(tuple(vec))
    derived = Subspace.span(dim, derived_vectors)
    if derived.dim == 0:
        return Subspace.full(dim)
    gram = killing_form(algebra).gram
    constraints = Matrix.from_rows(derived.basis, dim) @ gram
    return Subspace.span(dim, nullspace(constraints))


# -- full verification -----------------------------------------------------


def _corner_pattern(shape: SuperShape, r: int, vec: Vector) -> tuple[Matrix, bool]:
    """Top-left r x r pattern of a coordinate vector, plus an exactness flag.

    The flag is False when the vector has support outside the corner, i.e.
    when it is not the pattern's faithful image.
    """
    labels = minus_one_basis_labels(shape)
    corner = [[_ZERO] * r for _ in range(r)]
    faithful = True
    for k, (i, j) in enumerate(labels):
        if vec[k]:
            if i <= r and j <= r:
                corner[i - 1][j - 1] = vec[k]
            else:
                faithful = False
    return Matrix(corner, cols=r), faithful


def quotient_constants(
    algebra: DerivedAlgebra, levi: Subspace, radical: Subspace
) -> Table:
    """Bracket table of the quotient by the radical, on the Levi basis coords."""
    dim = algebra.dim
    columns = list(levi.basis) + list(radical.basis)
    if len(columns) != dim:
        raise ValueError("levi and radical bases do not total the ambient dimension")
    change = Matrix([[columns[j][i] for j in range(dim)] for i in range(dim)], cols=dim)
    inv_change = invert(change)
    table: Table = {}
    for u, v in itertools.combinations(range(levi.dim), 2):
        w = algebra.bracket(levi.basis[u], levi.basis[v])
        coords = tuple(
            sum((row[j] * w[j] for j in range(dim) if w[j]), _ZERO)
            for row in inv_change.entries[: levi.dim]
        )
        terms = tuple((s, c) for s, c in enumerate(coords) if c)
        if terms:
            table[(u, v)] = terms
    return table


def verify_levi_decomposition(shape: SuperShape, r: int) -> DecompositionReport:
    """Run every decomposition cross-check; raise on the first failure.

    Checks, in order: Levi + radical spans; trivial intersection; radical is
    an ideal; radical derived series hits zero within three steps; second
    derived term is central; Levi part closes; Levi part brackets like
    traceless r x r matrices under the corner identification; quotient Killing
    form is nondegenerate (meaningful for r >= 2, vacuous below); the
    Cartan-criterion radical equals the pattern radical; report flags agree
    with brute-force recomputation.
    """
    check_rank(shape, r)
    algebra = build_algebra(shape, r)
    dim = algebra.dim
    report = decomposition_report(shape, r)

    if r == 0:
        radical = Subspace.full(dim)
        levi = Subspace.zero(dim)
    else:
        radical = radical_closed_form(shape, r)
        levi = levi_closed_form(shape, r)

    def fail(check: str, detail: str) -> None:
        raise VerificationFailureError(check, f"{shape} r={r}: {detail}")

    if Subspace.span(dim, levi.basis + radical.basis).dim != dim:
        fail("levi-radical-span", "levi + radical do not span")
    if levi.dim + radical.dim != dim:
        fail("levi-radical-intersection", "dimensions overlap")

    for u in range(dim):
        e_u = algebra.basis_vector(u)
        for rho in radical.basis:
            if not radical.contains(algebra.bracket(e_u, rho)):
                fail("radical-ideal", f"bracket of basis {u} with a radical vector escapes")

    try:
        series = derived_series(algebra, radical)
    except NotASubalgebraError as exc:
        fail("radical-derived-series", str(exc))
    if series[-1].dim != 0 or len(series) - 1 > 3:
        fail("radical-derived-series", f"series dims {[s.dim for s in series]}")

    center_bf = center_bruteforce(algebra)
    second_derived = derived_subspace(algebra, derived_subspace(algebra, radical))
    if not center_bf.contains_subspace(second_derived):
        fail("radical-squared-central", "second derived term is not central")

    for i, j in itertools.combinations(range(levi.dim), 2):
        if not levi.contains(algebra.bracket(levi.basis[i], levi.basis[j])):
            fail("levi-closed", f"bracket of levi basis {i}, {j} escapes")

    patterns = []
    for vec in levi.basis:
        pattern, faithful = _corner_pattern(shape, r, vec)
        if not faithful or pattern.trace() != 0:
            fail("levi-sl-match", "levi basis vector is not a traceless corner pattern")
        patterns.append(pattern)
    for i, j in itertools.combinations(range(levi.dim), 2):
        got, faithful = _corner_pattern(shape, r, algebra.bracket(levi.basis[i], levi.basis[j]))
        want = patterns[i] @ patterns[j] - patterns[j] @ patterns[i]
        if not faithful or got != want:
            fail("levi-sl-match", f"bracket of levi basis {i}, {j} is not the matrix commutator")

    qgram = _gram_from_table(levi.dim, quotient_constants(algebra, levi, radical))
    if rank(qgram) != levi.dim:
        fail("quotient-killing-nondegenerate", f"rank {rank(qgram)} < {levi.dim}")

    if not spans_equal(radical_via_killing(algebra), radical):
        fail("radical-killing-match", "Cartan-criterion radical differs from pattern radical")

    if algebra.is_abelian() != report.is_abelian:
        fail("flags", "abelian flag disagrees with the bracket table")
    if is_solvable(algebra, Subspace.full(dim)) != report.is_solvable:
        fail("flags", "solvable flag disagrees with the derived series")
    if center_bf.dim != report.dim_center:
        fail("flags", f"center dim {center_bf.dim} != closed form {report.dim_center}")
    if levi.dim != report.dim_levi or radical.dim != report.dim_radical:
        fail("flags", "levi/radical dims disagree with the report")

    return report
