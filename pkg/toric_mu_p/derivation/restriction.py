"""Restriction of a Cox derivation to an affine chart."""

import logging
from dataclasses import dataclass

from toric_mu_p.common.exceptions import NotRegularOnChart
from toric_mu_p.derivation.cox_derivation import CoxDerivation
from toric_mu_p.exactlin.finite_field import FiniteField
from toric_mu_p.fan.charts import ChartFrame

logger = logging.getLogger(__name__)

ChartTerm = tuple[tuple[int, ...], int]


@dataclass(frozen=True)
class LocalVectorField:
    """sum_i g_i d/dz_i on one chart, each g_i a polynomial in z."""

    cone_index: int
    field: FiniteField
    components: tuple[tuple[ChartTerm, ...], ...]

    @property
    def is_zero(self) -> bool:
        return not any(self.components)

    @property
    def alphas(self) -> tuple[int, ...] | None:
        """The alpha_i when the field is sum alpha_i z_i d/dz_i, otherwise None."""
        n = len(self.components)
        alphas = []
        for i, terms in enumerate(self.components):
            unit = tuple(int(j == i) for j in range(n))
            if any(exponent != unit for exponent, _ in terms):
                return None
            alphas.append(terms[0][1] if terms else 0)
        return tuple(alphas)

    def __str__(self) -> str:
        parts = []
        for i, terms in enumerate(self.components):
            for exponent, coefficient in terms:
                monomial = "*".join(
                    f"z{j}" if x == 1 else f"z{j}^{x}" for j, x in enumerate(exponent) if x
                ) or "1"
                parts.append(f"{coefficient}*{monomial}*d/dz{i}")
        return " + ".join(parts) or "0"


def chart_restrict(derivation: CoxDerivation, frame: ChartFrame) -> LocalVectorField:
    """
    Writes D in the chart coordinates z_i = prod_rho x_rho^{<m_i, u_rho>}.

    D(z_i) = z_i * sum_rho <m_i, u_rho> f_rho / x_rho, a degree-zero Laurent
    expression; every Laurent monomial x^c of degree zero is the character
    chi^m with c_rho = <m, u_rho>, so its z-exponent is read off from the
    cone's rays.

    Raises:
        NotRegularOnChart: If some coefficient has a pole on the chart.
    """
    field = derivation.field
    n_rays = derivation.fan.n_rays
    components: list[tuple[ChartTerm, ...]] = []
    for i, exponents in enumerate(frame.exponents):
        collected: dict[tuple[int, ...], int] = {}
        for rho, component in enumerate(derivation.components):
            weight = field.from_int(exponents[rho])
            if not weight:
                continue
            for monomial, coefficient in component.terms:
                laurent = tuple(
                    monomial.exponents[s] - (s == rho) + exponents[s] for s in range(n_rays)
                )
                chart = frame.chart_exponent(laurent)
                expected = tuple(
                    sum(chart[j] * frame.exponents[j][s] for j in range(frame.dimension))
                    for s in range(n_rays)
                )
                if expected != laurent:
                    raise ValueError(f"Laurent monomial {laurent} does not have degree zero.")
                if any(x < 0 for x in chart):
                    raise NotRegularOnChart(
                        f"Component {i} on chart {frame.cone_index} has a pole at exponent {chart}."
                    )
                collected[chart] = field.add(collected.get(chart, 0), field.mul(weight, coefficient))
        terms = tuple(sorted(((e, c) for e, c in collected.items() if c), reverse=True))
        components.append(terms)
    local = LocalVectorField(cone_index=frame.cone_index, field=field, components=tuple(components))
    logger.debug("Chart %d restriction: %s", frame.cone_index, local)
    return local
