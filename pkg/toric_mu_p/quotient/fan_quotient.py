"""The quotient fan X / mu_p for a diagonal action."""

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Any

from toric_mu_p.common.exceptions import (
    InconsistentOverlattice,
    InvalidFanError,
    InvalidQuotient,
    TrivialAction,
)
from toric_mu_p.coxring.class_group import class_group
from toric_mu_p.derivation.cox_derivation import CoxDerivation
from toric_mu_p.derivation.restriction import chart_restrict
from toric_mu_p.exactlin.finite_field import FiniteField
from toric_mu_p.exactlin.lattice import Lattice, lattice_from_generators
from toric_mu_p.fan.charts import ChartFrame, chart_frame
from toric_mu_p.fan.model import Fan
from toric_mu_p.fan.predicates import validate
from toric_mu_p.oracle.checks.base import CheckResult
from toric_mu_p.quotient.diagonalize import Substitution

logger = logging.getLogger(__name__)


def local_exponents(fan: Fan, frame: ChartFrame, a: Sequence[int], p: int) -> tuple[int, ...]:
    """alpha_i in F_p with D|_chart = sum_i alpha_i z_i d/dz_i for the diagonal field a."""
    field = FiniteField(p)
    derivation = CoxDerivation.diagonal(fan, field, [field.from_int(x) for x in a], class_group(fan))
    alphas = chart_restrict(derivation, frame).alphas
    if alphas is None:
        raise ValueError(f"Diagonal field is not diagonal on chart {frame.cone_index}.")
    return alphas


def chart_generator(fan: Fan, frame: ChartFrame, alphas: Sequence[int], p: int) -> tuple[Fraction, ...]:
    """(1/p) sum_i alpha_i u_{rho_i}, the extra generator of N' seen from one chart."""
    return tuple(
        Fraction(sum(alpha * fan.rays[rho][j] for alpha, rho in zip(alphas, frame.cone)), p)
        for j in range(fan.rank)
    )


@dataclass
class QuotientReport:
    """The result of the pipeline, serializable to the JSON report."""

    input_fan: Fan
    p: int
    e: int
    diagonal_a: tuple[int, ...]
    base_chart: int
    chart_alphas: tuple[tuple[int, ...], ...]
    overlattice: Lattice
    quotient: Fan
    cone_determinants: tuple[int, ...]
    projective: bool | None = None
    substitution: Substitution | None = None
    verification: list[CheckResult] = field(default_factory=list)

    @property
    def overlattice_index(self) -> int:
        return int(self.overlattice.index)

    @property
    def map_degree(self) -> int:
        return self.overlattice_index

    @property
    def verified(self) -> bool:
        return all(result.passed for result in self.verification)

    @property
    def smooth_cones(self) -> tuple[bool, ...]:
        return tuple(d == 1 for d in self.cone_determinants)

    def to_document(self) -> dict[str, Any]:
        return {
            "input_fan": self.input_fan.to_document(),
            "p": self.p,
            "e": self.e,
            "diagonal_a": list(self.diagonal_a),
            "base_chart": self.base_chart,
            "chart_alphas": [
                {"cone": list(self.input_fan.maxcones[i]), "alphas": list(alphas)}
                for i, alphas in enumerate(self.chart_alphas)
            ],
            "overlattice_basis": [[str(x) for x in column] for column in self.overlattice.columns],
            "overlattice_index": self.overlattice_index,
            "map_degree": self.map_degree,
            "quotient_rays": [list(ray) for ray in self.quotient.rays],
            "quotient_maxcones": [list(cone) for cone in self.quotient.maxcones],
            "cone_determinants": list(self.cone_determinants),
            "smooth_cones": list(self.smooth_cones),
            "projective": self.projective,
            "substitution": self.substitution.to_document() if self.substitution else None,
            "verification": [result.to_document() for result in self.verification],
        }


def _primitive(vector: Sequence[int]) -> tuple[int, ...]:
    divisor = reduce(math.gcd, vector, 0)
    return tuple(x // divisor for x in vector)


def quotient_fan(fan: Fan, a: Sequence[int], p: int) -> QuotientReport:
    """
    Builds the fan of X / mu_p for the diagonal field sum a_rho x_rho d/dx_rho.

    On a chart with local exponents alpha, the quotient lattice is
    N' = Z^n + Z (1/p) sum_i alpha_i u_{rho_i}; the cones are the same
    real cones, so the quotient keeps the maximal cones and re-expresses
    the rays as primitive vectors of N'.

    N' is taken from the first maximal cone in file order and every other
    chart must reproduce it. A nontrivial action has nonzero alpha on
    every chart, so the first chart is always usable.

    Raises:
        TrivialAction: If every chart sees alpha = 0.
        InconsistentOverlattice: If two charts disagree on N'.
        InvalidQuotient: If [N' : N] is not p.
    """
    frames = [chart_frame(fan, i) for i in range(len(fan.maxcones))]
    chart_alphas = tuple(local_exponents(fan, frame, a, p) for frame in frames)
    if not any(any(alphas) for alphas in chart_alphas):
        raise TrivialAction("Action is trivial on every chart.")
    base = 0
    lattices = [
        lattice_from_generators(fan.rank, [chart_generator(fan, frame, alphas, p)])
        for frame, alphas in zip(frames, chart_alphas)
    ]
    overlattice = lattices[base]
    for index, lattice in enumerate(lattices):
        if lattice != overlattice:
            raise InconsistentOverlattice(
                f"Chart {index} gives {lattice}, chart {base} gives {overlattice}."
            )
    if overlattice.index != p:
        raise InvalidQuotient(f"Overlattice {overlattice} has index {overlattice.index}, expected {p}.")
    rays = tuple(_primitive(overlattice.integral_coordinates(ray)) for ray in fan.rays)
    quotient = Fan(rank=fan.rank, rays=rays, maxcones=fan.maxcones)
    violations = validate(quotient)
    if violations:
        raise InvalidFanError(f"Quotient fan is invalid: {'; '.join(violations)}")
    determinants = tuple(quotient.cone_determinant(i) for i in range(len(quotient.maxcones)))
    logger.info(
        "Quotient fan: overlattice index %s, cone determinants %s",
        overlattice.index,
        determinants,
    )
    return QuotientReport(
        input_fan=fan,
        p=p,
        e=1,
        diagonal_a=tuple(x % p for x in a),
        base_chart=base,
        chart_alphas=chart_alphas,
        overlattice=overlattice,
        quotient=quotient,
        cone_determinants=determinants,
    )
