"""Independent, finite verification of quotient results."""

from toric_mu_p.oracle.checks import (
    CheckResult,
    VerificationContext,
    chart_semigroup_check,
    graded_isomorphism_check,
    localization_check,
    localizer,
)
from toric_mu_p.oracle.dimensions import (
    HilbertProfile,
    constant_dim,
    diagonal_constant_dim,
    diagonal_hilbert_profile,
    effective_classes,
    hilbert_profile,
)
from toric_mu_p.oracle.verifier import Verifier

__all__ = [
    "CheckResult",
    "HilbertProfile",
    "VerificationContext",
    "Verifier",
    "chart_semigroup_check",
    "constant_dim",
    "diagonal_constant_dim",
    "diagonal_hilbert_profile",
    "effective_classes",
    "graded_isomorphism_check",
    "hilbert_profile",
    "localization_check",
    "localizer",
]
