"""Normalizing a vector field so that D^p = D exactly."""

import itertools
import logging

from toric_mu_p.common.exceptions import (
    NeedsFieldExtension,
    NoExactLift,
    NotPClosed,
    TrivialAction,
)
from toric_mu_p.derivation.cox_derivation import CoxDerivation, euler_basis, p_power
from toric_mu_p.exactlin.finite_field import FiniteField

logger = logging.getLogger(__name__)


def scalar_ratio(derivation: CoxDerivation, other: CoxDerivation) -> int | None:
    """alpha with other == alpha * derivation, or None if there is none."""
    field = derivation.field
    vector = derivation.vector()
    pivot = next((i for i, x in enumerate(vector) if x), None)
    if pivot is None:
        raise TrivialAction("Vector field is identically zero.")
    alpha = field.mul(other.vector()[pivot], field.inv(vector[pivot]))
    if derivation.scale(alpha) != other:
        return None
    return alpha


def minimal_extension_degree(field: FiniteField, target: int) -> int:
    """Least multiple e' of e such that beta^(p-1) = target is solvable in F_{p^e'}."""
    p = field.p
    degree = field.e
    while True:
        norm_exponent = (p**degree - 1) // (p - 1)
        if field.power(target, norm_exponent) == 1:
            return degree
        degree += field.e


def rescale_to_idempotent(derivation: CoxDerivation) -> CoxDerivation:
    """
    Finds beta with (beta D)^p = beta D, given D^p = alpha D.

    (beta D)^p = beta^p alpha D, so beta must satisfy beta^(p-1) = 1/alpha.
    Returns the smallest such beta in integer representation times D.

    Raises:
        NotPClosed: If D^p is not a multiple of D, or D is nilpotent.
        NeedsFieldExtension: If the root lives only in a larger field.
    """
    power = p_power(derivation)
    if power == derivation:
        return derivation
    field = derivation.field
    alpha = scalar_ratio(derivation, power)
    if alpha is None:
        raise NotPClosed("D^p is not a scalar multiple of D.")
    if alpha == 0:
        raise NotPClosed("D is nilpotent: D^p = 0.")
    target = field.inv(alpha)
    for beta in range(1, field.order):
        if field.power(beta, field.p - 1) == target:
            logger.info("Rescaling vector field by %d (alpha = %d)", beta, alpha)
            return derivation.scale(beta)
    degree = minimal_extension_degree(field, target)
    raise NeedsFieldExtension(
        f"No ({field.p}-1)-th root of {target} in {field}; extend to degree {degree}.",
        minimal_degree=degree,
    )


def exact_idempotent_lift(derivation: CoxDerivation) -> CoxDerivation:
    """
    Searches D + sum_j c_j E_j with c in F_p^r for an exact p-idempotent.

    The search runs over coefficient tuples in lexicographic order from
    the zero tuple, so D itself is returned when it already qualifies.

    Raises:
        NoExactLift: If no shift works.
    """
    field = derivation.field
    euler = [
        element.as_derivation(derivation.fan, field, derivation.class_group)
        for element in euler_basis(derivation.fan, derivation.class_group)
    ]
    for shift in itertools.product(range(field.p), repeat=len(euler)):
        candidate = derivation
        for c, element in zip(shift, euler):
            if c:
                candidate = candidate + element.scale(c)
        if p_power(candidate) == candidate:
            logger.info("Exact lift uses Euler shift %s", shift)
            return candidate
    raise NoExactLift(f"No Euler shift in F_{field.p}^{len(euler)} gives D^p = D.")
