"""Invariant characters of a chart versus the dual of the quotient lattice."""

import itertools
import logging
from collections.abc import Sequence

from toric_mu_p.coxring.class_group import class_group
from toric_mu_p.derivation.cox_derivation import CoxDerivation
from toric_mu_p.derivation.restriction import chart_restrict
from toric_mu_p.exactlin.finite_field import FiniteField
from toric_mu_p.exactlin.lattice import Lattice, dual_lattice
from toric_mu_p.fan.charts import chart_frame
from toric_mu_p.fan.model import Fan
from toric_mu_p.oracle.checks.base import CheckResult, VerificationCheck, VerificationContext

logger = logging.getLogger(__name__)

NAME = "chart_semigroup"


def chart_semigroup_check(
    fan: Fan,
    a: Sequence[int],
    cone_index: int,
    lattice: Lattice,
    p: int,
    box_bound: int,
) -> CheckResult:
    """
    On the box [-B, B]^n inside the dual cone of one maximal cone, compares
    the characters chi^m fixed by the local action (sum_i alpha_i <m, u_i>
    = 0 mod p) with the points of the dual of the quotient lattice.
    """
    field = FiniteField(p)
    frame = chart_frame(fan, cone_index)
    diagonal = CoxDerivation.diagonal(fan, field, [x % p for x in a], class_group(fan))
    alphas = chart_restrict(diagonal, frame).alphas
    dual = dual_lattice(lattice)
    parameters = {"cone": list(frame.cone), "box_bound": box_bound, "alphas": list(alphas or ())}
    if alphas is None:
        return CheckResult(
            name=NAME, passed=False, parameters=parameters, detail="chart restriction is not diagonal"
        )
    cone_rays = [fan.rays[rho] for rho in frame.cone]
    for m in itertools.product(range(-box_bound, box_bound + 1), repeat=fan.rank):
        pairings = [sum(x * u for x, u in zip(m, ray)) for ray in cone_rays]
        if any(value < 0 for value in pairings):
            continue
        invariant = sum(alpha * value for alpha, value in zip(alphas, pairings)) % p == 0
        if invariant != dual.contains(m):
            logger.warning("Chart %d disagrees at character %s", cone_index, m)
            return CheckResult(
                name=NAME,
                passed=False,
                parameters=parameters,
                counterexample={"m": list(m), "invariant": invariant},
                detail="invariant characters differ from the dual lattice",
            )
    return CheckResult(name=NAME, passed=True, parameters=parameters)


class ChartSemigroupCheck(VerificationCheck):
    name = NAME

    def run(self, context: VerificationContext) -> list[CheckResult]:
        return [
            chart_semigroup_check(
                context.fan,
                context.diagonal,
                index,
                context.overlattice,
                context.p,
                context.box_bound,
            )
            for index in range(len(context.fan.maxcones))
        ]
