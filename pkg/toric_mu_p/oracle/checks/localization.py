"""Degree-zero invariants of S_F: weight rule against the original derivation."""

import logging
import math
from collections.abc import Sequence
from typing import TYPE_CHECKING

from toric_mu_p.common.exceptions import InvalidLocalizer
from toric_mu_p.coxring.polynomial import GradedPolynomial, Monomial
from toric_mu_p.coxring.sections import in_irrelevant_ideal
from toric_mu_p.derivation.cox_derivation import CoxDerivation, apply
from toric_mu_p.exactlin.polyhedra import Inequality, lattice_points
from toric_mu_p.fan.model import Fan
from toric_mu_p.oracle.checks.base import CheckResult, VerificationCheck, VerificationContext

if TYPE_CHECKING:
    from toric_mu_p.quotient.diagonalize import Substitution

logger = logging.getLogger(__name__)

NAME = "localization"


def _weight(a: Sequence[int], exponents: Sequence[int], p: int) -> int:
    return sum(x * e for x, e in zip(a, exponents)) % p


def localizer(fan: Fan, a: Sequence[int], p: int, cone_index: int) -> Monomial:
    """The product of the variables off a maximal cone, raised to p if it is not invariant."""
    support = Monomial(
        tuple(int(rho in fan.complement(cone_index)) for rho in range(fan.n_rays))
    )
    if _weight(a, support.exponents, p) == 0:
        return support
    return Monomial(tuple(p * e for e in support.exponents))


def degree_zero_exponents(fan: Fan, localizing: Monomial, bound: int) -> list[tuple[int, ...]]:
    """
    Laurent exponents c_rho = <m, u_rho> of the characters m with c + bound * F >= 0.

    These are the degree-zero Laurent monomials x^c / 1 that become regular
    after multiplying by F^bound, enumerated as lattice points of M.
    """
    system = [
        Inequality.of(ray, bound * f) for ray, f in zip(fan.rays, localizing.exponents)
    ]
    return [
        tuple(sum(m[j] * ray[j] for j in range(fan.rank)) for ray in fan.rays)
        for m in lattice_points(system, fan.rank)
    ]


def _clearing_power(laurent: Sequence[int], localizing: Monomial) -> int:
    """The least k with laurent + k * F >= 0."""
    return max(
        (math.ceil(-c / f) for c, f in zip(laurent, localizing.exponents) if c < 0),
        default=0,
    )


class _Images:
    """Phi(x^e) built from cached powers of the images Phi(x_rho)."""

    def __init__(self, substitution: "Substitution", derivation: CoxDerivation) -> None:
        self.images = substitution.images
        self.one = GradedPolynomial.monomial(
            derivation.field,
            (0,) * derivation.class_group.rank,
            Monomial.one(derivation.fan.n_rays),
        )
        self.powers: list[list[GradedPolynomial]] = [[self.one] for _ in self.images]

    def _power(self, rho: int, exponent: int) -> GradedPolynomial:
        powers = self.powers[rho]
        while len(powers) <= exponent:
            powers.append(powers[-1] * self.images[rho])
        return powers[exponent]

    def of(self, exponents: Sequence[int]) -> GradedPolynomial:
        result = self.one
        for rho, exponent in enumerate(exponents):
            if exponent:
                result = result * self._power(rho, exponent)
        return result


def localization_check(
    derivation: CoxDerivation,
    substitution: "Substitution",
    localizing: Monomial,
    bound: int,
) -> CheckResult:
    """
    Compares two descriptions of the invariant degree-zero part of S_F.

    Every character m with c + k F >= 0 for some k <= bound, where
    c_rho = <m, u_rho>, gives the Laurent monomial y^c = Phi(x^{c + kF}) / Phi(F)^k
    in the diagonal coordinates y = Phi(x). The weight rule says y^c is
    invariant exactly when <a, c> = 0 in F_p. The other side applies the
    original D through the quotient rule,
    D(Phi(g)) Phi(F) - k Phi(g) D(Phi(F)) = 0 with g = x^{c + kF}.

    Raises:
        InvalidLocalizer: If F has nonzero weight or is not in the irrelevant ideal.
    """
    fan, field = derivation.fan, derivation.field
    a, p = substitution.eigenvalues, field.p
    if _weight(a, localizing.exponents, p):
        raise InvalidLocalizer(f"Localizer {localizing} is not invariant.")
    if not in_irrelevant_ideal(fan, localizing):
        raise InvalidLocalizer(f"Localizer {localizing} is not in the irrelevant ideal.")
    images = _Images(substitution, derivation)
    image_f = images.of(localizing.exponents)
    derivative_f = apply(derivation, image_f)
    parameters = {"localizer": str(localizing), "bound": bound}
    for laurent in degree_zero_exponents(fan, localizing, bound):
        k = _clearing_power(laurent, localizing)
        numerator = tuple(c + k * f for c, f in zip(laurent, localizing.exponents))
        image_g = images.of(numerator)
        quotient_rule = apply(derivation, image_g) * image_f - (image_g * derivative_f).scale(
            field.from_int(k)
        )
        weight_zero = _weight(a, laurent, p) == 0
        invariant = quotient_rule.is_zero
        if weight_zero != invariant:
            logger.warning("Localization mismatch at %s (k=%d)", laurent, k)
            return CheckResult(
                name=NAME,
                passed=False,
                parameters=parameters,
                counterexample={
                    "laurent_exponent": list(laurent),
                    "k": k,
                    "weight_zero": weight_zero,
                    "invariant": invariant,
                },
                detail="weight rule and derivation disagree",
            )
    return CheckResult(name=NAME, passed=True, parameters=parameters)


class LocalizationCheck(VerificationCheck):
    name = NAME

    def run(self, context: VerificationContext) -> list[CheckResult]:
        return [
            localization_check(
                context.derivation,
                context.substitution,
                localizer(context.fan, context.diagonal, context.p, index),
                context.degree_bound,
            )
            for index in range(len(context.fan.maxcones))
        ]
