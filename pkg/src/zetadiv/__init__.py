"""Point-count divisibility workbench over finite fields.

Computes the classical divisibility exponents for polynomial systems,
counts points of the defined schemes over extension fields by exhaustive
enumeration, reconstructs zeta functions exactly from the counts, and
verifies that every reciprocal zero and pole is divisible by the predicted
power of q as an algebraic integer.
"""

__version__ = "0.1.0"

from .counting import (
    Budget,
    CountTable,
    cone_identity_check,
    count_affine,
    count_affine_complement,
    count_one,
    count_projective,
    count_projective_complement,
    count_table,
    divisibility_check,
    excision_identity_check,
    inclusion_exclusion_check,
)
from .exponents import BoundsReport, bounds_report, kappa, lambda_, mu, mu_j, q_adic_order
from .field import FieldElement, FiniteField, embed, enumerate_elements, make_field
from .harness import (
    ExperimentSpec,
    FuzzSummary,
    Report,
    fuzz_campaign,
    parse_spec,
    recheck,
    run_experiment,
)
from .poly import MultiPoly, PolySystem, vanishes_on_system
from .zeta import (
    IntPoly,
    ReconstructionOutcome,
    ZetaFunction,
    minimal_recurrence,
    reconstruct_zeta,
    signed_eigenvalue_sums_from_counts,
    uniform_divisibility_order,
    verify_theorem,
    zeta_from_recurrence,
)

__all__ = [
    "__version__",
    "Budget",
    "BoundsReport",
    "CountTable",
    "ExperimentSpec",
    "FieldElement",
    "FiniteField",
    "FuzzSummary",
    "IntPoly",
    "MultiPoly",
    "PolySystem",
    "ReconstructionOutcome",
    "Report",
    "ZetaFunction",
    "bounds_report",
    "cone_identity_check",
    "count_affine",
    "count_affine_complement",
    "count_one",
    "count_projective",
    "count_projective_complement",
    "count_table",
    "divisibility_check",
    "embed",
    "enumerate_elements",
    "excision_identity_check",
    "fuzz_campaign",
    "inclusion_exclusion_check",
    "kappa",
    "lambda_",
    "make_field",
    "minimal_recurrence",
    "mu",
    "mu_j",
    "parse_spec",
    "q_adic_order",
    "recheck",
    "reconstruct_zeta",
    "run_experiment",
    "signed_eigenvalue_sums_from_counts",
    "uniform_divisibility_order",
    "vanishes_on_system",
    "verify_theorem",
    "zeta_from_recurrence",
]
