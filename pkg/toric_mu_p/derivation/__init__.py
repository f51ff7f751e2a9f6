"""Cox-ring derivations and their chart restrictions."""

from toric_mu_p.derivation.cox_derivation import (
    CoxDerivation,
    EulerElement,
    apply,
    equals_mod_euler,
    euler_basis,
    is_mu_p,
    p_power,
    piece_matrix,
    require_mu_p,
)
from toric_mu_p.derivation.restriction import LocalVectorField, chart_restrict

__all__ = [
    "CoxDerivation",
    "EulerElement",
    "LocalVectorField",
    "apply",
    "chart_restrict",
    "equals_mod_euler",
    "euler_basis",
    "is_mu_p",
    "p_power",
    "piece_matrix",
    "require_mu_p",
]
