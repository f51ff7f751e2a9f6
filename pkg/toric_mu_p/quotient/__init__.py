"""Rescaling, diagonalization and the quotient fan."""

from toric_mu_p.quotient.diagonalize import Substitution, diagonalize, substitute
from toric_mu_p.quotient.fan_quotient import QuotientReport, local_exponents, quotient_fan
from toric_mu_p.quotient.pipeline import check_fan_structure, check_hypotheses, mu_p_quotient
from toric_mu_p.quotient.rescale import (
    exact_idempotent_lift,
    minimal_extension_degree,
    rescale_to_idempotent,
)

__all__ = [
    "QuotientReport",
    "Substitution",
    "check_fan_structure",
    "check_hypotheses",
    "diagonalize",
    "exact_idempotent_lift",
    "local_exponents",
    "minimal_extension_degree",
    "mu_p_quotient",
    "quotient_fan",
    "rescale_to_idempotent",
    "substitute",
]
