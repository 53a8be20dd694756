"""Exact finite-dimensional checks for anti-pre-Lie, transposed Poisson and related structures.

All arithmetic is over the rationals; see :mod:`tpalg.tensor` for the
tensor conventions shared by every module.
"""

from .algebra import (
    AlgebraClass,
    AlgebraPresentation,
    check_class,
    check_derivation,
    commutator,
    passes,
    pre_apl_sum,
    zinbiel_symmetrization,
)
from .coalgebra import (
    BialgebraKind,
    CoalgebraClass,
    Coproduct,
    check_bialgebra,
    check_coalgebra,
    check_one_cocycle,
)
from .errors import (
    AlgebraError,
    ArgumentError,
    ConfigurationError,
    DimensionError,
    PreconditionError,
)
from .forms import (
    BilinearForm,
    FormPredicate,
    ManinKind,
    check_form,
    check_manin_triple,
    induce_anti_pre_lie,
)
from .identities import IdentityReport
from .matched_pairs import (
    MatchedPairData,
    build_double,
    check_matched_pair,
    standard_pair_from_dual,
)
from .operators import (
    OOperatorProblem,
    apl_from_derivation,
    aybe_derivation_solution_check,
    canonical_r,
    check_o_operator,
    induce_pre_structure,
    pre_apl_from_zinbiel,
    pre_aplp_from_zinbiel,
    witt_lie,
)
from .representations import (
    RepKind,
    Representation,
    adjoint,
    check_representation,
    dualize,
    semidirect_product,
)
from .tensor import LinearMap, scalar
from .yang_baxter import (
    TwoTensor,
    check_coboundary_conditions,
    check_o_operator_forms,
    coboundary_coproducts,
    compute_A,
    compute_T,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraClass",
    "AlgebraError",
    "AlgebraPresentation",
    "ArgumentError",
    "BialgebraKind",
    "BilinearForm",
    "CoalgebraClass",
    "ConfigurationError",
    "Coproduct",
    "DimensionError",
    "FormPredicate",
    "IdentityReport",
    "LinearMap",
    "ManinKind",
    "MatchedPairData",
    "OOperatorProblem",
    "PreconditionError",
    "RepKind",
    "Representation",
    "TwoTensor",
    "adjoint",
    "apl_from_derivation",
    "aybe_derivation_solution_check",
    "build_double",
    "canonical_r",
    "check_bialgebra",
    "check_class",
    "check_coalgebra",
    "check_coboundary_conditions",
    "check_derivation",
    "check_form",
    "check_manin_triple",
    "check_matched_pair",
    "check_o_operator",
    "check_o_operator_forms",
    "check_one_cocycle",
    "check_representation",
    "coboundary_coproducts",
    "commutator",
    "compute_A",
    "compute_T",
    "dualize",
    "induce_anti_pre_lie",
    "induce_pre_structure",
    "passes",
    "pre_apl_from_zinbiel",
    "pre_apl_sum",
    "pre_aplp_from_zinbiel",
    "scalar",
    "semidirect_product",
    "standard_pair_from_dual",
    "witt_lie",
    "zinbiel_symmetrization",
]
