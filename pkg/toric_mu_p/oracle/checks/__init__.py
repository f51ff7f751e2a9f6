"""Finite verification checks."""

from toric_mu_p.oracle.checks.base import CheckResult, VerificationCheck, VerificationContext
from toric_mu_p.oracle.checks.chart_semigroup import ChartSemigroupCheck, chart_semigroup_check
from toric_mu_p.oracle.checks.graded_isomorphism import (
    GradedIsomorphismCheck,
    graded_isomorphism_check,
)
from toric_mu_p.oracle.checks.localization import (
    LocalizationCheck,
    degree_zero_exponents,
    localization_check,
    localizer,
)

__all__ = [
    "ChartSemigroupCheck",
    "CheckResult",
    "GradedIsomorphismCheck",
    "LocalizationCheck",
    "VerificationCheck",
    "VerificationContext",
    "chart_semigroup_check",
    "degree_zero_exponents",
    "graded_isomorphism_check",
    "localization_check",
    "localizer",
]
