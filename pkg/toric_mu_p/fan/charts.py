"""Affine charts of a smooth fan."""

import logging
from dataclasses import dataclass

from toric_mu_p.common.exceptions import NotSmoothCone
from toric_mu_p.fan.model import Fan

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChartFrame:
    """
    Coordinates z_i = chi^{m_i} on the chart of one smooth maximal cone.

    ``dual_basis[i]`` is m_i, dual to the i-th ray of the cone, and
    ``exponents[i][rho]`` is <m_i, u_rho>, the exponent of x_rho in the
    Cox-ring expression of z_i.
    """

    cone_index: int
    cone: tuple[int, ...]
    dual_basis: tuple[tuple[int, ...], ...]
    exponents: tuple[tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.cone)

    def chart_exponent(self, laurent: tuple[int, ...]) -> tuple[int, ...]:
        """Exponent vector in z of a degree-zero Cox Laurent monomial."""
        return tuple(laurent[rho] for rho in self.cone)


def chart_frame(fan: Fan, cone_index: int) -> ChartFrame:
    """
    Builds the chart of maximal cone ``cone_index``.

    Raises:
        NotSmoothCone: If the cone's generators are not a Z-basis.
    """
    matrix = fan.cone_matrix(cone_index)
    if abs(int(matrix.det())) != 1:
        raise NotSmoothCone(
            f"Cone {cone_index} {list(fan.maxcones[cone_index])} has determinant "
            f"{int(matrix.det())}."
        )
    inverse = matrix.inv()
    n = fan.rank
    dual_basis = tuple(tuple(int(inverse[j, i]) for j in range(n)) for i in range(n))
    exponents = tuple(
        tuple(sum(m[j] * ray[j] for j in range(n)) for ray in fan.rays) for m in dual_basis
    )
    logger.debug("Chart %d dual basis %s", cone_index, dual_basis)
    return ChartFrame(
        cone_index=cone_index,
        cone=fan.maxcones[cone_index],
        dual_basis=dual_basis,
        exponents=exponents,
    )
