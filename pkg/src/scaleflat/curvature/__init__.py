from .charts import BUNDLE, REDUCED, base_coframe, base_frame, k_parameter
from .errors import NotIntegrableError, ScreenInapplicableError
from .flatness import (
    VERDICT_FLAT,
    VERDICT_NOT_FLAT,
    VERDICT_NOT_INTEGRABLE,
    CurvatureReport,
    corollary37,
    flatness,
    quadratic_obstruction,
)
from .invariants import (
    FLAT_TEST_NAMES,
    M_NAMES,
    S_NAMES,
    ChainCache,
    FiberedScalar,
    coordinate_forms_M,
    curvature_M,
    curvature_S,
    curvatures,
)
from .structure import (
    coordinate_form_diagnostic,
    estructure_diagnostic,
    lifted_coframe,
    prop35_relations,
    reduced_coframe,
    verify_prop35,
    verify_structure_eq,
)
from .torsion import solve_reduction, torsions_L, torsions_T

__all__ = [
    "BUNDLE",
    "REDUCED",
    "base_coframe",
    "base_frame",
    "k_parameter",
    "NotIntegrableError",
    "ScreenInapplicableError",
    "VERDICT_FLAT",
    "VERDICT_NOT_FLAT",
    "VERDICT_NOT_INTEGRABLE",
    "CurvatureReport",
    "corollary37",
    "flatness",
    "quadratic_obstruction",
    "FLAT_TEST_NAMES",
    "M_NAMES",
    "S_NAMES",
    "ChainCache",
    "FiberedScalar",
    "coordinate_forms_M",
    "curvature_M",
    "curvature_S",
    "curvatures",
    "coordinate_form_diagnostic",
    "estructure_diagnostic",
    "lifted_coframe",
    "prop35_relations",
    "reduced_coframe",
    "verify_prop35",
    "verify_structure_eq",
    "solve_reduction",
    "torsions_L",
    "torsions_T",
]
