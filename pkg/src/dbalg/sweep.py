"""Aggregated self-checks behind the ``verify`` command.

Each family pits an implementation route against an independent one (raw
double commutator vs simplified table, closed-form center/radical/Levi vs
brute-force recomputation, claimed isomorphism witnesses vs replayed bracket
preservation) across every shape up to a size cap, plus seeded random
generator blocks.  A family reports its case count and the first few
counterexamples; the CLI turns any failure into a nonzero exit.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .classify import (
    AlgebraSpec,
    conjugation_iso,
    flip_iso,
    iso_decision,
    verify_homomorphism,
)
from .derived import (
    DerivedAlgebra,
    OddGenerator,
    build_algebra,
    build_algebra_from_general_B,
    closed_form_constants,
    derived_bracket_raw,
)
from .linalg import Matrix
from .structure import (
    VerificationFailureError,
    center_bruteforce,
    center_closed_form,
    radical_closed_form,
    radical_via_killing,
    spans_equal,
    verify_levi_decomposition,
)
from .supermatrix import (
    SuperMatrix,
    SuperShape,
    minus_one_basis_element,
    super_bracket,
)

_ZERO = Fraction(0)
_MAX_REPORTED = 5


@dataclass
class CheckResult:
    """Outcome of one check family: case count and recorded counterexamples."""

    family: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    _suppressed: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures and self._suppressed == 0

    def case(self) -> None:
        self.cases += 1

    def fail(self, message: str) -> None:
        if len(self.failures) < _MAX_REPORTED:
            self.failures.append(message)
        else:
            self._suppressed += 1

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" (+{self._suppressed} more)" if self._suppressed else ""
        return f"{status}  {self.family:<26} {self.cases:>6} cases{extra}"


def all_shapes(max_dim: int) -> list[SuperShape]:
    return [
        SuperShape(m, n)
        for m in range(1, max_dim + 1)
        for n in range(1, max_dim + 1)
    ]


def all_specs(max_dim: int) -> list[AlgebraSpec]:
    return [
        AlgebraSpec(shape.m, shape.n, r)
        for shape in all_shapes(max_dim)
        for r in range(min(shape.m, shape.n) + 1)
    ]


def family_rng(seed: int, family: str) -> random.Random:
    """Deterministic per-family stream so families stay independent of order."""
    return random.Random(f"{seed}:{family}")


def random_generator(rng: random.Random, shape: SuperShape) -> OddGenerator:
    """Random small-rational generator block; occasionally non-integer entries."""
    rows = [
        [
            Fraction(rng.randint(-4, 4), rng.choice((1, 1, 1, 1, 2, 3)))
            for _ in range(shape.n)
        ]
        for _ in range(shape.m)
    ]
    return OddGenerator(shape, Matrix(rows, cols=shape.n))


# -- graded bracket axioms on the ambient block algebra --------------------


def _graded_units(shape: SuperShape) -> list[tuple[SuperMatrix, int]]:
    """All matrix units of the block algebra with their Z-degrees."""
    total = shape.total
    units = []
    for s in range(total):
        for t in range(total):
            degree = (0 if t < shape.m else 1) if s < shape.m else (-1 if t < shape.m else 0)
            units.append(
                (SuperMatrix.from_dense(shape, Matrix.unit(total, total, s, t)), degree)
            )
    return units


def check_super_bracket_axioms(max_dim: int) -> CheckResult:
    """Graded anticommutativity, grading compatibility and the graded Jacobi law.

    Anticommutativity and grading run on all matrix-unit pairs for block sizes
    up to min(max_dim, 3); the Jacobi sweep caps sizes at 2 to keep the triple
    loop exact yet quick.
    """
    result = CheckResult("super-bracket-axioms")
    for shape in all_shapes(min(max_dim, 3)):
        units = _graded_units(shape)
        # the symmetry relation covers both orders of a pair, so unordered
        # pairs (with repeats) suffice
        for (x, dx), (y, dy) in itertools.combinations_with_replacement(units, 2):
            result.case()
            sign = 1 if (dx != 0 and dy != 0) else -1
            left = super_bracket(x, y)
            right = super_bracket(y, x)
            if left != (right if sign == 1 else -right):
                result.fail(f"{shape}: anticommutativity fails at degrees {dx}, {dy}")
            target = dx + dy
            if target not in (-1, 0, 1):
                if not left.is_zero():
                    result.fail(f"{shape}: bracket of degrees {dx}, {dy} is nonzero")
            else:
                # degree -1 lives in the lower-left block, degree 0 on the
                # diagonal blocks, degree +1 in the upper-right block
                for d, clean in (
                    (-1, left.c.is_zero()),
                    (0, left.a.is_zero() and left.d.is_zero()),
                    (1, left.b.is_zero()),
                ):
                    if d != target and not clean:
                        result.fail(
                            f"{shape}: bracket of degrees {dx}, {dy} leaks into degree {d}"
                        )
    for shape in all_shapes(min(max_dim, 2)):
        units = _graded_units(shape)
        # inner brackets recur across triples, so tabulate the pairs once
        pair_bracket = [[super_bracket(x, y) for y, _ in units] for x, _ in units]
        for (p, (x, dx)), (q, (y, dy)) in itertools.product(enumerate(units), repeat=2):
            xy = pair_bracket[p][q]
            x_row = pair_bracket[p]
            y_row = pair_bracket[q]
            # graded Jacobi: the nested term carries (-1)^(|x||y|)
            negate_nested = dx != 0 and dy != 0
            for s, (z, _) in enumerate(units):
                result.case()
                lhs = super_bracket(x, y_row[s])
                nested = super_bracket(y, x_row[s])
                rhs = super_bracket(xy, z)
                rhs = rhs - nested if negate_nested else rhs + nested
                if lhs != rhs:
                    result.fail(f"{shape}: Jacobi fails at degrees {dx}, {dy}")
    return result


# -- Lie axioms of the constructed algebras --------------------------------


def _bracket_with_terms(
    algebra: DerivedAlgebra, u: int, terms: dict[int, Fraction]
) -> dict[int, Fraction]:
    """Sparse bracket(e_u, sum_w terms[w] e_w)."""
    out: dict[int, Fraction] = {}
    for w, c in terms.items():
        for s, coeff in algebra.bracket_basis(u, w):
            out[s] = out.get(s, _ZERO) + c * coeff
    return {s: c for s, c in out.items() if c}


def algebra_lie_failures(algebra: DerivedAlgebra, label: str) -> list[str]:
    """Jacobi defects of a structure-constant table, as counterexample strings.

    Antisymmetry and vanishing diagonal hold structurally for table-backed
    brackets, so the non-structural content is the Jacobi identity over all
    basis triples.
    """
    failures = []
    dim = algebra.dim
    for u, v, w in itertools.combinations(range(dim), 3):
        defect: dict[int, Fraction] = {}
        for a, (b, c) in ((u, (v, w)), (v, (w, u)), (w, (u, v))):
            inner = dict(algebra.bracket_basis(b, c))
            for s, coeff in _bracket_with_terms(algebra, a, inner).items():
                defect[s] = defect.get(s, _ZERO) + coeff
        if any(defect.values()):
            failures.append(f"{label}: Jacobi defect at basis triple {(u, v, w)}")
            if len(failures) >= _MAX_REPORTED:
                break
    return failures


def check_lie_axioms(
    max_dim: int, seed: int = 0, random_per_shape: int = 5
) -> CheckResult:
    """Jacobi sweeps for every normalized rank and for seeded random generators."""
    result = CheckResult("derived-lie-axioms")
    rng = family_rng(seed, "derived-lie-axioms")
    for shape in all_shapes(max_dim):
        for r in range(min(shape.m, shape.n) + 1):
            result.case()
            for msg in algebra_lie_failures(build_algebra(shape, r), f"{shape} r={r}"):
                result.fail(msg)
        for k in range(random_per_shape):
            result.case()
            gen = random_generator(rng, shape)
            algebra = build_algebra_from_general_B(gen)
            for msg in algebra_lie_failures(algebra, f"{shape} random #{k}"):
                result.fail(msg)
    return result


def check_raw_bracket(max_dim: int, seed: int = 0, samples_per_shape: int = 5) -> CheckResult:
    """Raw double-commutator route versus the plain block formula.

    For random degree -1 pairs and a random generator: the raw result is
    again degree -1, antisymmetric, and its corner block equals
    x b y - y b x computed by ordinary matrix products.
    """
    result = CheckResult("raw-bracket-identity")
    rng = family_rng(seed, "raw-bracket-identity")
    for shape in all_shapes(max_dim):
        for _ in range(samples_per_shape):
            result.case()
            gen = random_generator(rng, shape)
            x = SuperMatrix.from_c_block(
                shape, random_generator(rng, shape.flipped()).b
            )
            y = SuperMatrix.from_c_block(
                shape, random_generator(rng, shape.flipped()).b
            )
            forward = derived_bracket_raw(x, y, gen)
            backward = derived_bracket_raw(y, x, gen)
            if not (forward + backward).is_zero():
                result.fail(f"{shape}: raw bracket is not antisymmetric")
            if not (
                forward.a.is_zero() and forward.b.is_zero() and forward.d.is_zero()
            ):
                result.fail(f"{shape}: raw bracket leaves the degree -1 block")
            direct = x.c @ gen.b @ y.c - y.c @ gen.b @ x.c
            if forward.c != direct:
                result.fail(f"{shape}: corner block differs from x b y - y b x")
    return result


def check_closed_form_tables(max_dim: int) -> CheckResult:
    """Raw-built structure constants equal the simplified table, all shapes/ranks."""
    result = CheckResult("closed-form-tables")
    for spec in all_specs(max_dim):
        result.case()
        built = build_algebra(spec.shape, spec.r)
        if dict(built.table) != closed_form_constants(spec.shape, spec.r):
            result.fail(f"{spec}: tables differ")
    return result


def check_center_oracles(max_dim: int) -> CheckResult:
    """Stacked-adjoint nullspace equals the closed-form center, as subspaces."""
    result = CheckResult("center-oracles")
    for spec in all_specs(max_dim):
        result.case()
        brute = center_bruteforce(build_algebra(spec.shape, spec.r))
        closed = center_closed_form(spec.shape, spec.r)
        if not spans_equal(brute, closed):
            result.fail(f"{spec}: center spans differ")
    return result


def check_radical_oracles(max_dim: int) -> CheckResult:
    """Cartan-criterion radical equals the closed-form radical (rank >= 1)."""
    result = CheckResult("radical-oracles")
    for spec in all_specs(max_dim):
        algebra = build_algebra(spec.shape, spec.r)
        result.case()
        cartan = radical_via_killing(algebra)
        if spec.r == 0:
            if cartan.dim != algebra.dim:
                result.fail(f"{spec}: rank-0 radical is not the whole space")
        elif not spans_equal(cartan, radical_closed_form(spec.shape, spec.r)):
            result.fail(f"{spec}: radical spans differ")
    return result


def check_levi_decomposition(max_dim: int) -> CheckResult:
    """Full decomposition verification battery on every shape and rank."""
    result = CheckResult("levi-decomposition")
    for spec in all_specs(max_dim):
        result.case()
        try:
            verify_levi_decomposition(spec.shape, spec.r)
        except VerificationFailureError as exc:
            result.fail(f"{spec}: {exc}")
    return result


def check_conjugation_witnesses(
    max_dim: int, seed: int = 0, random_per_shape: int = 5
) -> CheckResult:
    """Normalizing coordinate maps replayed as isomorphisms, random generators."""
    result = CheckResult("conjugation-witnesses")
    rng = family_rng(seed, "conjugation-witnesses")
    for shape in all_shapes(max_dim):
        for k in range(random_per_shape):
            result.case()
            gen = random_generator(rng, shape)
            source = build_algebra_from_general_B(gen)
            target = build_algebra(shape, source.rank_r)
            if not verify_homomorphism(conjugation_iso(gen), source, target):
                result.fail(f"{shape} random #{k}: conjugation map fails to verify")
    return result


def check_flip_witnesses(max_dim: int) -> CheckResult:
    """Corner-flip maps replayed as isomorphisms onto the size-swapped algebras."""
    result = CheckResult("flip-witnesses")
    for spec in all_specs(max_dim):
        result.case()
        source = build_algebra(spec.shape, spec.r)
        target = build_algebra(spec.shape.flipped(), spec.r)
        if not verify_homomorphism(flip_iso(spec.shape, spec.r), source, target):
            result.fail(f"{spec}: flip map fails to verify")
    return result


def brute_force_invariants(spec: AlgebraSpec) -> dict[str, bool | int]:
    """Separator invariants recomputed without any closed form.

    Abelian from the raw table, total dimension by counting basis labels,
    Levi dimension as the Cartan-radical codimension, center dimension from
    the stacked-adjoint nullspace.
    """
    algebra = build_algebra(spec.shape, spec.r)
    return {
        "abelian": algebra.is_abelian(),
        "dim_total": len(algebra.basis_labels),
        "dim_levi": algebra.dim - radical_via_killing(algebra).dim,
        "dim_center": center_bruteforce(algebra).dim,
    }


def check_classification(max_dim: int) -> CheckResult:
    """Soundness of every pairwise verdict up to the size cap.

    Positive verdicts are replayed through verify_homomorphism; negative
    verdicts must name an invariant whose brute-force values both differ and
    match the values recorded in the verdict.
    """
    result = CheckResult("classification")
    specs = all_specs(max_dim)
    brute = {spec: brute_force_invariants(spec) for spec in specs}
    for left, right in itertools.product(specs, repeat=2):
        result.case()
        verdict = iso_decision(left, right)
        if verdict.isomorphic:
            ok = verify_homomorphism(
                verdict.witness,
                build_algebra(left.shape, left.r),
                build_algebra(right.shape, right.r),
            )
            if not ok:
                result.fail(f"{left} ~ {right}: witness fails to verify")
        else:
            sep = verdict.separator
            lv = brute[left][sep.invariant]
            rv = brute[right][sep.invariant]
            if lv == rv:
                result.fail(f"{left} vs {right}: separator {sep.invariant} does not separate")
            elif (lv, rv) != (sep.left_value, sep.right_value):
                result.fail(
                    f"{left} vs {right}: separator values {sep.left_value}, "
                    f"{sep.right_value} disagree with brute force {lv}, {rv}"
                )
    return result


def run_all(max_dim: int = 4, seed: int = 0, random_per_shape: int = 5) -> list[CheckResult]:
    """Every check family at the given size cap, with seeded random sweeps."""
    return [
        check_super_bracket_axioms(max_dim),
        check_lie_axioms(max_dim, seed, random_per_shape),
        check_raw_bracket(max_dim, seed),
        check_closed_form_tables(max_dim),
        check_center_oracles(max_dim),
        check_radical_oracles(max_dim),
        check_levi_decomposition(max_dim),
        check_conjugation_witnesses(max_dim, seed, random_per_shape),
        check_flip_witnesses(max_dim),
        check_classification(max_dim),
    ]
