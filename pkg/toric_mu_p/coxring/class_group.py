"""The class group Cl(X) = Z^k / M and the grading of the Cox ring."""

import functools
import logging
from collections.abc import Sequence
from dataclasses import dataclass

from sympy import ImmutableMatrix, eye

from toric_mu_p.common.exceptions import InvalidClassError, InvalidFanError, TorsionClassGroup
from toric_mu_p.exactlin.integer import hermite_rows, invariant_factors, smith_normal_form
from toric_mu_p.fan.model import Fan

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClassGroup:
    """
    Cl(X) identified with Z^r.

    ``degree_matrix`` is r x k with deg(x_rho) as column rho; ``section``
    is k x r and satisfies degree_matrix * section = identity, turning a
    class into a torus-invariant divisor representing it.
    """

    rank: int
    degree_matrix: tuple[tuple[int, ...], ...]
    section: tuple[tuple[int, ...], ...]

    @property
    def n_rays(self) -> int:
        return len(self.section)

    def ray_degree(self, rho: int) -> tuple[int, ...]:
        return tuple(row[rho] for row in self.degree_matrix)

    def ray_degrees(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.ray_degree(rho) for rho in range(self.n_rays))

    def degree(self, exponents: Sequence[int]) -> tuple[int, ...]:
        """Class of the divisor sum_rho exponents[rho] D_rho."""
        if len(exponents) != self.n_rays:
            raise InvalidClassError(
                f"Divisor has {len(exponents)} coefficients, expected {self.n_rays}."
            )
        return tuple(sum(row[rho] * exponents[rho] for rho in range(self.n_rays)) for row in self.degree_matrix)

    def check_class(self, d: Sequence[int]) -> tuple[int, ...]:
        if len(d) != self.rank:
            raise InvalidClassError(f"Class {list(d)} has length {len(d)}, expected {self.rank}.")
        return tuple(int(x) for x in d)

    def representative(self, d: Sequence[int]) -> tuple[int, ...]:
        """A divisor (as ray coefficients) of class d."""
        d = self.check_class(d)
        return tuple(sum(row[j] * d[j] for j in range(self.rank)) for row in self.section)


@functools.cache
def class_group(fan: Fan) -> ClassGroup:
    """
    Computes Cl(X) from the ray matrix R via its Smith form R = U S V.

    The last k - n rows of U^-1 give deg: Z^k -> Cl(X), and the last k - n
    columns of U give a section. The degree matrix is then put in Hermite
    form so the grading does not depend on the elimination order.

    Raises:
        TorsionClassGroup: If an invariant factor differs from 1.
        InvalidFanError: If the rays do not span N_R.
    """
    rays = fan.ray_matrix()
    u, s, _ = smith_normal_form(rays)
    factors = invariant_factors(s)
    if len(factors) < fan.rank or 0 in factors[: fan.rank]:
        raise InvalidFanError("Rays do not span the lattice over Q.")
    torsion = [d for d in factors if d != 1]
    if torsion:
        raise TorsionClassGroup(f"Class group has torsion with invariant factors {torsion}.")
    k, n = fan.n_rays, fan.rank
    r = k - n
    if r == 0:
        return ClassGroup(rank=0, degree_matrix=(), section=tuple(() for _ in range(k)))
    u_inverse = u.inv()
    raw_degree = u_inverse[n:, :]
    raw_section = u[:, n:]
    degree = ImmutableMatrix(hermite_rows(raw_degree.tolist()))
    change = degree * raw_section
    section = raw_section * change.inv()
    if degree * section != eye(r) or degree * rays != ImmutableMatrix.zeros(r, n):
        raise InvalidFanError("Degree map and section are inconsistent.")
    logger.debug("Class group degrees: %s", degree.tolist())
    return ClassGroup(
        rank=r,
        degree_matrix=tuple(tuple(int(x) for x in row) for row in degree.tolist()),
        section=tuple(tuple(int(x) for x in row) for row in section.tolist()),
    )
