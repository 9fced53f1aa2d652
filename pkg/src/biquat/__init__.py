"""Biquaternion algebra and the square roots of -1.

The library constructs and classifies the roots of -1 among the
biquaternions (quaternions with complex components): the nontrivial
family cosh(t) mu + sinh(t) nu I with perpendicular unit pure directions,
plus the degenerate roots q = mu and q = +/-I. The oracle module adds
seeded sampling, an exhaustive coefficient-lattice census and Newton
refinement as numerical evidence that no further families exist.
"""

from .algebra import (
    COMPLEX_COMPONENTS,
    DEFAULT_TOL,
    QUATERNION_PARTS,
    Biquaternion,
    ComplexComponents,
    ComplexScalar,
    PureUnit,
    Quaternion,
    biquat_mul,
    convert_view,
    dot_cross,
    quat_mul,
    scalar_vector_split,
)
from .oracle import (
    LatticeHit,
    LatticeSpec,
    NonConvergenceError,
    SearchReport,
    TermTable,
    format_terms,
    lattice_search,
    refine_root,
    sample_perpendicular,
    sample_root,
    sample_unit_pure,
    term_table,
)
from .roots import (
    DecomposedForm,
    ImaginaryUnit,
    Nontrivial,
    NotRoot,
    PerpendicularityError,
    Residuals,
    RootClassification,
    TheoremViolationError,
    UnitPure,
    classify_root,
    constraint_residuals,
    decompose,
    make_nontrivial_root,
    recover_parameter,
)

__version__ = "0.1.0"

__all__ = [
    "Biquaternion",
    "ComplexComponents",
    "ComplexScalar",
    "COMPLEX_COMPONENTS",
    "DEFAULT_TOL",
    "DecomposedForm",
    "ImaginaryUnit",
    "LatticeHit",
    "LatticeSpec",
    "NonConvergenceError",
    "Nontrivial",
    "NotRoot",
    "PerpendicularityError",
    "PureUnit",
    "QUATERNION_PARTS",
    "Quaternion",
    "Residuals",
    "RootClassification",
    "SearchReport",
    "TermTable",
    "TheoremViolationError",
    "UnitPure",
    "biquat_mul",
    "classify_root",
    "constraint_residuals",
    "convert_view",
    "decompose",
    "dot_cross",
    "format_terms",
    "lattice_search",
    "make_nontrivial_root",
    "quat_mul",
    "recover_parameter",
    "refine_root",
    "sample_perpendicular",
    "sample_root",
    "sample_unit_pure",
    "scalar_vector_split",
    "term_table",
]
