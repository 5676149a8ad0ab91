"""Exact graded Chow rings of stacks of zips and truncated displays.

Core layers:

- intpoly: exact multivariate polynomials over arbitrary-precision integers
- weyl: zip data, Weyl-group orbit bases, coset counts, Poincare series
- zlinalg: Smith normal form, cokernels, graded abelian groups
- chow: relation ideals, graded quotients, Picard groups, localized reports
- service / cli: pydantic wire models, FastAPI endpoints, command line
"""

from .chow import (
    ChowPresentation,
    ChowReport,
    LocalizedReport,
    M11Check,
    bt_report,
    build_report,
    display_datum,
    display_report,
    fzip_report,
    graded_chow,
    localize,
    m11_compatibility,
    picard,
    present,
    q_dimension,
    relations,
)
from .errors import DecompositionError, MatrixCapExceeded, ParameterError
from .intpoly import (
    Poly,
    add,
    elementary_symmetric,
    elementary_symmetric_squares,
    frobenius_twist,
    multiply,
)
from .weyl import (
    GroupSpec,
    LeviSpec,
    ZipDatum,
    coset_count,
    invariant_basis,
    invariant_basis_size,
    invariant_generators,
    rational_rank_series,
    top_degree_bound,
)
from .zlinalg import (
    AbelianGroup,
    GradedAbelianGroup,
    SmithForm,
    cokernel,
    rational_rank,
    smith_normal_form,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "ChowPresentation",
    "ChowReport",
    "DecompositionError",
    "GradedAbelianGroup",
    "GroupSpec",
    "LeviSpec",
    "LocalizedReport",
    "M11Check",
    "MatrixCapExceeded",
    "ParameterError",
    "Poly",
    "SmithForm",
    "ZipDatum",
    "add",
    "bt_report",
    "build_report",
    "cokernel",
    "coset_count",
    "display_datum",
    "display_report",
    "elementary_symmetric",
    "elementary_symmetric_squares",
    "frobenius_twist",
    "fzip_report",
    "graded_chow",
    "invariant_basis",
    "invariant_basis_size",
    "invariant_generators",
    "localize",
    "m11_compatibility",
    "multiply",
    "picard",
    "present",
    "q_dimension",
    "rational_rank",
    "rational_rank_series",
    "relations",
    "smith_normal_form",
    "top_degree_bound",
]
