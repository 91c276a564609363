"""Exact construction, structure theory and classification of the Lie
algebras carried by the lower-left corner block of gl(m|n) under a square-zero
derived bracket.

The public surface re-exported here covers the full pipeline: exact rational
linear algebra, the graded block-matrix layer, building an algebra from a
generator block (normalized or arbitrary), closed-form and brute-force
structure theory, and constructive isomorphism decisions.
"""

from .linalg import (
    Matrix,
    NonSquareError,
    Rational,
    SingularMatrixError,
    Vector,
    invert,
    nullspace,
    rank,
    rank_normal_transforms,
)
from .supermatrix import (
    Grade,
    GradeTag,
    ShapeMismatchError,
    SuperMatrix,
    SuperShape,
    grade_of,
    minus_one_basis_element,
    minus_one_basis_labels,
    super_bracket,
    z_component,
)
from .derived import (
    DerivedAlgebra,
    DimensionMismatchError,
    NormalFormCertificate,
    NotDegreeMinusOneError,
    OddGenerator,
    RankOutOfRangeError,
    algebra_from_dict,
    algebra_to_dict,
    build_algebra,
    build_algebra_from_general_B,
    closed_form_constants,
    derived_bracket_raw,
    normal_form,
)
from .structure import (
    BilinearForm,
    DecompositionReport,
    NotASubalgebraError,
    Subspace,
    VerificationFailureError,
    center_bruteforce,
    center_closed_form,
    decomposition_report,
    derived_series,
    is_solvable,
    killing_form,
    levi_closed_form,
    radical_closed_form,
    radical_via_killing,
    spans_equal,
    verify_levi_decomposition,
)
from .classify import (
    AlgebraSpec,
    ClassificationVerdict,
    LinearMap,
    Separator,
    conjugate_supermatrix,
    conjugation_iso,
    flip_iso,
    flip_superalgebra,
    invariants_of,
    iso_decision,
    supertranspose,
    verify_homomorphism,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraSpec",
    "BilinearForm",
    "ClassificationVerdict",
    "DecompositionReport",
    "DerivedAlgebra",
    "DimensionMismatchError",
    "Grade",
    "GradeTag",
    "LinearMap",
    "Matrix",
    "NonSquareError",
    "NormalFormCertificate",
    "NotASubalgebraError",
    "NotDegreeMinusOneError",
    "OddGenerator",
    "Rational",
    "RankOutOfRangeError",
    "Separator",
    "ShapeMismatchError",
    "SingularMatrixError",
    "Subspace",
    "SuperMatrix",
    "SuperShape",
    "Vector",
    "VerificationFailureError",
    "algebra_from_dict",
    "algebra_to_dict",
    "build_algebra",
    "build_algebra_from_general_B",
    "center_bruteforce",
    "center_closed_form",
    "closed_form_constants",
    "conjugate_supermatrix",
    "conjugation_iso",
    "decomposition_report",
    "derived_bracket_raw",
    "derived_series",
    "flip_iso",
    "flip_superalgebra",
    "grade_of",
    "invariants_of",
    "invert",
    "is_solvable",
    "iso_decision",
    "killing_form",
    "levi_closed_form",
    "minus_one_basis_element",
    "minus_one_basis_labels",
    "normal_form",
    "nullspace",
    "radical_closed_form",
    "radical_via_killing",
    "rank",
    "rank_normal_transforms",
    "spans_equal",
    "super_bracket",
    "supertranspose",
    "verify_homomorphism",
    "verify_levi_decomposition",
    "z_component",
]
