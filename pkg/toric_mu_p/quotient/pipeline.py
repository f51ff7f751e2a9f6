"""End-to-end computation of X / mu_p from a fan and a Cox-ring vector field."""

import logging

from toric_mu_p.common.decorators import pipeline_stage
from toric_mu_p.common.exceptions import (
    InvalidFanError,
    NotComplete,
    NotProjective,
    NotSmoothCone,
)
from toric_mu_p.derivation.cox_derivation import CoxDerivation, require_mu_p
from toric_mu_p.fan.model import Fan
from toric_mu_p.fan.predicates import is_complete, is_projective, is_smooth, validate
from toric_mu_p.oracle.checks.base import CheckResult, VerificationContext
from toric_mu_p.oracle.verifier import Verifier
from toric_mu_p.quotient.diagonalize import Substitution, diagonalize
from toric_mu_p.quotient.fan_quotient import QuotientReport, quotient_fan
from toric_mu_p.quotient.rescale import exact_idempotent_lift, rescale_to_idempotent

logger = logging.getLogger(__name__)


@pipeline_stage("validate")
def _validate(fan: Fan) -> None:
    violations = validate(fan)
    if violations:
        raise InvalidFanError(f"Invalid fan: {'; '.join(violations)}")


@pipeline_stage("is_smooth")
def _require_smooth(fan: Fan) -> None:
    if not is_smooth(fan):
        singular = [i for i in range(len(fan.maxcones)) if fan.cone_determinant(i) != 1]
        raise NotSmoothCone(f"Maximal cones {singular} are not unimodular.")


@pipeline_stage("is_complete")
def _require_complete(fan: Fan) -> None:
    if not is_complete(fan):
        raise NotComplete("Fan is not complete.")


@pipeline_stage("is_projective")
def _check_projective(fan: Fan, required: bool) -> bool:
    projective = is_projective(fan)
    if required and not projective:
        raise NotProjective("Fan admits no strictly convex support function.")
    if not projective:
        logger.warning("Fan is complete but not projective; continuing.")
    return projective


def check_fan_structure(fan: Fan) -> None:
    """
    Runs the validate, is_smooth and is_complete stages.

    Enough to build the class group and read a vector field; projectivity
    is left to ``check_hypotheses``.

    Raises:
        InvalidFanError: If the fan is invalid, singular or incomplete.
    """
    _validate(fan)
    _require_smooth(fan)
    _require_complete(fan)


def check_hypotheses(fan: Fan, *, require_projective: bool = False) -> bool:
    """
    Runs the fan stages of the pipeline.

    Returns:
        Whether the fan is projective.

    Raises:
        InvalidFanError: If the fan is invalid, singular or incomplete, or
            not projective while ``require_projective`` is set.
    """
    check_fan_structure(fan)
    return _check_projective(fan, require_projective)


@pipeline_stage("rescale")
def _rescale(derivation: CoxDerivation) -> CoxDerivation:
    return rescale_to_idempotent(derivation)


@pipeline_stage("is_mu_p")
def _require_mu_p(derivation: CoxDerivation) -> None:
    require_mu_p(derivation)


@pipeline_stage("exact_idempotent_lift")
def _lift(derivation: CoxDerivation) -> CoxDerivation:
    return exact_idempotent_lift(derivation)


@pipeline_stage("diagonalize")
def _diagonalize(derivation: CoxDerivation) -> Substitution:
    return diagonalize(derivation)


@pipeline_stage("quotient_fan")
def _quotient(fan: Fan, substitution: Substitution, p: int) -> QuotientReport:
    return quotient_fan(fan, substitution.eigenvalues, p)


@pipeline_stage("verify")
def _verify(context: VerificationContext) -> list[CheckResult]:
    return Verifier(context).run()


def mu_p_quotient(
    fan: Fan,
    derivation: CoxDerivation,
    *,
    require_projective: bool = False,
    rescale: bool = False,
    skip_verify: bool = False,
    degree_bound: int = 6,
    box_bound: int = 6,
) -> QuotientReport:
    """
    Computes the quotient fan of X_fan by the mu_p action of ``derivation``.

    Stages: validate, is_smooth, is_complete, is_projective, optional
    rescale, is_mu_p, exact_idempotent_lift, diagonalize, quotient_fan and,
    unless skipped, verify. Verification failures are recorded in the
    report rather than raised.

    Raises:
        ToricQuotientError: The first failing stage's error, tagged with the
            stage name.
    """
    params = {"p": derivation.field.p, "e": derivation.field.e, "rays": fan.n_rays}
    logger.info("Starting mu_p quotient", extra={"params": params})
    projective = check_hypotheses(fan, require_projective=require_projective)
    if rescale:
        derivation = _rescale(derivation)
    _require_mu_p(derivation)
    lifted = _lift(derivation)
    substitution = _diagonalize(lifted)
    report = _quotient(fan, substitution, derivation.field.p)
    report.e = derivation.field.e
    report.projective = projective
    report.substitution = substitution
    if not skip_verify:
        context = VerificationContext(
            fan=fan,
            derivation=lifted,
            substitution=substitution,
            overlattice=report.overlattice,
            degree_bound=degree_bound,
            box_bound=box_bound,
        )
        report.verification = _verify(context)
    logger.info(
        "Finished mu_p quotient",
        extra={"params": {**params, "index": report.overlattice_index, "verified": report.verified}},
    )
    return report
