"""Structural analysis: center, radical, Levi part, Killing form, solvability.

Every closed-form pattern here has a brute-force partner (joint adjoint
nullspace for the center, Cartan's criterion for the radical, derived series
for solvability) and the tests exercise both legs against each other, plus
hand-frozen dimensions for the two large reference algebras.
"""

import dataclasses
from fractions import Fraction

import pytest

from dbalg.derived import RankOutOfRangeError, build_algebra
from dbalg.linalg import Matrix, rank
from dbalg.structure import (
    BilinearForm,
    NotASubalgebraError,
    Subspace,
    VerificationFailureError,
    center_bruteforce,
    center_closed_form,
    decomposition_report,
    derived_series,
    derived_subspace,
    is_solvable,
    killing_form,
    levi_closed_form,
    quotient_constants,
    radical_closed_form,
    radical_via_killing,
    spans_equal,
    verify_levi_decomposition,
)
from dbalg.supermatrix import SuperShape

F = Fraction


def full_space(shape: SuperShape) -> Subspace:
    return Subspace.full(shape.m * shape.n)


# ---------------------------------------------------------------------------
# subspaces and forms


def test_subspace_rejects_dependent_basis():
    with pytest.raises(ValueError):
        Subspace(2, ((F(1), F(0)), (F(2), F(0))))


def test_subspace_span_canonicalizes():
    s = Subspace.span(2, [(F(2), F(0)), (F(0), F(2)), (F(2), F(2))])
    assert s.dim == 2
    assert s.contains((F(5), F(-7)))


def test_subspace_membership_and_inclusion():
    line = Subspace.span(3, [(F(1), F(1), F(0))])
    plane = Subspace.span(3, [(F(1), F(0), F(0)), (F(0), F(1), F(0))])
    assert plane.contains_subspace(line)
    assert not line.contains_subspace(plane)
    assert not line.contains((F(1), F(0), F(0)))
    assert Subspace.zero(3).dim == 0
    assert Subspace.full(3).dim == 3


def test_spans_equal_ignores_basis_choice():
    a = Subspace.span(2, [(F(1), F(1)), (F(1), F(-1))])
    b = Subspace.full(2)
    assert spans_equal(a, b)
    assert not spans_equal(a, Subspace.span(2, [(F(1), F(1))]))


def test_bilinear_form_basics():
    gram = Matrix([[2, 0], [0, 0]])
    form = BilinearForm(2, gram)
    assert form.value((F(1), F(3)), (F(2), F(5))) == 4
    assert form.rank() == 1
    assert not form.is_nondegenerate()
    assert form.kernel() == [(F(0), F(1))]
    with pytest.raises(ValueError):
        BilinearForm(3, gram)


# ---------------------------------------------------------------------------
# dimension reports (golden values)


def test_report_gl_5_6_rank_2():
    report = decomposition_report(SuperShape(5, 6), 2)
    assert (report.dim_total, report.dim_levi, report.dim_radical, report.dim_center) \
        == (30, 3, 27, 12)
    assert report.levi_type == "sl(2)"
    assert not report.is_abelian
    assert not report.is_solvable
    assert report.to_dict() == {
        "m": 5, "n": 6, "r": 2,
        "dim_total": 30, "dim_levi": 3, "dim_radical": 27, "dim_center": 12,
        "is_abelian": False, "is_solvable": False, "levi_type": "sl(2)",
    }


def test_report_gl_7_7_rank_5():
    report = decomposition_report(SuperShape(7, 7), 5)
    assert (report.dim_total, report.dim_levi, report.dim_radical, report.dim_center) \
        == (49, 24, 25, 4)
    assert report.levi_type == "sl(5)"


def test_report_degenerate_ranks():
    assert decomposition_report(SuperShape(2, 3), 0).is_abelian
    assert decomposition_report(SuperShape(2, 3), 1).is_solvable
    assert decomposition_report(SuperShape(2, 3), 1).levi_type == "0"
    assert decomposition_report(SuperShape(1, 1), 1).is_abelian


# ---------------------------------------------------------------------------
# center, both routes


def test_center_rank_zero_is_everything():
    center = center_closed_form(SuperShape(2, 3), 0)
    assert center.dim == 6
    assert spans_equal(center, center_bruteforce(build_algebra(SuperShape(2, 3), 0)))


def test_center_full_rank_square_is_scalar_line():
    center = center_closed_form(SuperShape(2, 2), 2)
    assert center.dim == 1
    assert center.contains((F(1), F(0), F(0), F(1)))
    assert spans_equal(center, center_bruteforce(build_algebra(SuperShape(2, 2), 2)))


def test_center_small_rank_rectangle():
    center = center_closed_form(SuperShape(3, 2), 1)
    assert center.dim == 2
    assert spans_equal(center, center_bruteforce(build_algebra(SuperShape(3, 2), 1)))


def test_center_rank_equal_one_side_is_zero():
    center = center_closed_form(SuperShape(2, 3), 2)
    assert center.dim == 0
    assert spans_equal(center, center_bruteforce(build_algebra(SuperShape(2, 3), 2)))


def test_center_golden_dimensions():
    assert center_closed_form(SuperShape(5, 6), 2).dim == 12
    assert center_closed_form(SuperShape(7, 7), 5).dim == 4


# ---------------------------------------------------------------------------
# radical and Levi part


def test_radical_rank_zero_is_callers_problem():
    with pytest.raises(RankOutOfRangeError):
        radical_closed_form(SuperShape(2, 2), 0)


def test_radical_rank_one_is_whole_space():
    radical = radical_closed_form(SuperShape(2, 3), 1)
    assert spans_equal(radical, full_space(SuperShape(2, 3)))


def test_radical_full_rank_square_is_scalar_line():
    radical = radical_closed_form(SuperShape(2, 2), 2)
    assert radical.dim == 1
    assert radical.contains((F(1), F(0), F(0), F(1)))


def test_radical_golden_dimensions():
    assert radical_closed_form(SuperShape(5, 6), 2).dim == 27
    assert radical_closed_form(SuperShape(7, 7), 5).dim == 25


def test_radical_via_killing_on_abelian_is_everything():
    algebra = build_algebra(SuperShape(2, 2), 0)
    assert spans_equal(radical_via_killing(algebra), full_space(SuperShape(2, 2)))


def test_radical_via_killing_golden_dimensions():
    assert radical_via_killing(build_algebra(SuperShape(5, 6), 2)).dim == 27
    assert radical_via_killing(build_algebra(SuperShape(7, 7), 5)).dim == 25


def test_radical_routes_agree_on_small_shapes():
    for m, n, r in [(2, 2, 1), (2, 2, 2), (3, 2, 2), (3, 3, 2), (3, 3, 3)]:
        shape = SuperShape(m, n)
        assert spans_equal(
            radical_via_killing(build_algebra(shape, r)),
            radical_closed_form(shape, r),
        ), (m, n, r)


def test_levi_dimensions_and_tracelessness():
    assert levi_closed_form(SuperShape(5, 6), 2).dim == 3
    assert levi_closed_form(SuperShape(7, 7), 5).dim == 24
    assert levi_closed_form(SuperShape(2, 3), 1).dim == 0
    levi = levi_closed_form(SuperShape(2, 2), 2)
    # basis: the two off-diagonal corner units and one traceless diagonal
    assert levi.dim == 3
    for vec in levi.basis:
        assert vec[0] + vec[3] == 0  # coefficient of F_11 plus F_22


# ---------------------------------------------------------------------------
# derived series and solvability


def test_derived_series_of_abelian_algebra():
    algebra = build_algebra(SuperShape(2, 3), 0)
    series = derived_series(algebra, full_space(SuperShape(2, 3)))
    assert [s.dim for s in series] == [6, 0]


def test_derived_series_of_rank_one_algebra():
    algebra = build_algebra(SuperShape(2, 2), 1)
    series = derived_series(algebra, full_space(SuperShape(2, 2)))
    assert [s.dim for s in series] == [4, 3, 1, 0]


def test_radical_derived_series_terminates_fast():
    for m, n, r in [(2, 2, 1), (3, 3, 2), (4, 3, 2)]:
        shape = SuperShape(m, n)
        algebra = build_algebra(shape, r)
        series = derived_series(algebra, radical_closed_form(shape, r))
        assert series[-1].dim == 0
        assert len(series) - 1 <= 3, (m, n, r)


def test_levi_part_is_perfect():
    for m, n, r in [(2, 2, 2), (3, 3, 2), (3, 3, 3)]:
        shape = SuperShape(m, n)
        algebra = build_algebra(shape, r)
        series = derived_series(algebra, levi_closed_form(shape, r))
        assert len(series) == 1, (m, n, r)


def test_is_solvable_matches_rank_split():
    assert is_solvable(build_algebra(SuperShape(2, 2), 1), full_space(SuperShape(2, 2)))
    assert not is_solvable(build_algebra(SuperShape(2, 2), 2), full_space(SuperShape(2, 2)))
    assert is_solvable(build_algebra(SuperShape(2, 2), 2), Subspace.zero(4))


def test_derived_series_demands_a_subalgebra():
    algebra = build_algebra(SuperShape(2, 2), 1)
    not_closed = Subspace.span(4, [(F(0), F(1), F(0), F(0)), (F(0), F(0), F(1), F(0))])
    with pytest.raises(NotASubalgebraError):
        derived_series(algebra, not_closed)


def test_second_derived_of_radical_is_central():
    for m, n, r in [(2, 2, 1), (3, 3, 2), (4, 4, 3)]:
        shape = SuperShape(m, n)
        algebra = build_algebra(shape, r)
        radical = radical_closed_form(shape, r)
        second = derived_subspace(algebra, derived_subspace(algebra, radical))
        assert center_bruteforce(algebra).contains_subspace(second), (m, n, r)


# ---------------------------------------------------------------------------
# Killing form


def test_killing_form_of_abelian_algebra_is_zero():
    form = killing_form(build_algebra(SuperShape(2, 2), 0))
    assert form.gram == Matrix.zeros(4, 4)


def test_killing_form_is_symmetric():
    gram = killing_form(build_algebra(SuperShape(3, 2), 2)).gram
    assert gram == gram.transpose()


def test_killing_form_kernel_of_gl2_like_algebra():
    # At full square rank the kernel is exactly the scalar line.
    algebra = build_algebra(SuperShape(2, 2), 2)
    form = killing_form(algebra)
    kernel = Subspace.span(4, form.kernel())
    assert spans_equal(kernel, center_closed_form(SuperShape(2, 2), 2))


def test_killing_form_restricted_to_levi_is_nondegenerate():
    algebra = build_algebra(SuperShape(2, 2), 2)
    form = killing_form(algebra)
    levi = levi_closed_form(SuperShape(2, 2), 2)
    gram = Matrix(
        [[form.value(u, v) for v in levi.basis] for u in levi.basis], cols=levi.dim
    )
    assert rank(gram) == levi.dim


# ---------------------------------------------------------------------------
# full decomposition verification


def test_verification_passes_on_reference_shapes():
    report = verify_levi_decomposition(SuperShape(5, 6), 2)
    assert (report.dim_levi, report.dim_radical, report.dim_center) == (3, 27, 12)
    verify_levi_decomposition(SuperShape(2, 2), 1)
    verify_levi_decomposition(SuperShape(2, 3), 0)
    verify_levi_decomposition(SuperShape(3, 3), 3)


def test_quotient_constants_demands_a_full_split():
    algebra = build_algebra(SuperShape(2, 2), 2)
    with pytest.raises(ValueError):
        quotient_constants(algebra, Subspace.zero(4), Subspace.zero(4))


def test_verification_catches_corrupted_table(monkeypatch):
    # Flip one structure constant of gl(2|2) at rank 2; the Levi part then
    # fails to close and the verifier must name that check.
    real = build_algebra

    def tampered(shape, r):
        algebra = real(shape, r)
        if (shape, r) == (SuperShape(2, 2), 2):
            table = dict(algebra.table)
            table[(1, 2)] = ((0, F(1)), (3, F(1)))
            return dataclasses.replace(algebra, table=table)
        return algebra

    monkeypatch.setattr("dbalg.structure.build_algebra", tampered)
    with pytest.raises(VerificationFailureError) as exc_info:
        verify_levi_decomposition(SuperShape(2, 2), 2)
    assert exc_info.value.check == "levi-closed"
