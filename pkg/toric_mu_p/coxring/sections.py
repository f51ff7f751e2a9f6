"""Graded pieces S_d of the Cox ring and the space of torus-equivariant fields."""

import functools
import logging
from collections.abc import Sequence
from dataclasses import dataclass

from sympy import Matrix

from toric_mu_p.common.exceptions import InvalidClassError, NotComplete
from toric_mu_p.coxring.class_group import ClassGroup
from toric_mu_p.coxring.polynomial import Monomial
from toric_mu_p.exactlin.polyhedra import Inequality, UnboundedRegion, lattice_points
from toric_mu_p.fan.model import Fan

logger = logging.getLogger(__name__)


@functools.cache
def _graded_piece(fan: Fan, representative: tuple[int, ...]) -> tuple[Monomial, ...]:
    system = [
        Inequality.of(ray, representative[rho]) for rho, ray in enumerate(fan.rays)
    ]
    try:
        points = lattice_points(system, fan.rank)
    except UnboundedRegion as e:
        raise NotComplete(f"Graded piece for divisor {representative} is infinite: {e}") from e
    monomials = [
        Monomial(
            tuple(
                sum(m[j] * ray[j] for j in range(fan.rank)) + representative[rho]
                for rho, ray in enumerate(fan.rays)
            )
        )
        for m in points
    ]
    return tuple(sorted(monomials, reverse=True))


def graded_piece(
    fan: Fan,
    class_group: ClassGroup,
    d: Sequence[int],
    representative: Sequence[int] | None = None,
) -> tuple[Monomial, ...]:
    """
    Monomial basis of S_d, sorted with higher powers of x_0 first.

    S_d is spanned by the x^{<m,u> + b} for m in the lattice points of
    {m : <m, u_rho> + b_rho >= 0}, where b is any divisor of class d.

    Raises:
        InvalidClassError: If d has the wrong length or b has the wrong class.
        NotComplete: If the polytope is unbounded.
    """
    d = class_group.check_class(d)
    if representative is None:
        b = class_group.representative(d)
    else:
        b = tuple(int(x) for x in representative)
        if class_group.degree(b) != d:
            raise InvalidClassError(f"Divisor {list(b)} does not have class {list(d)}.")
    piece = _graded_piece(fan, b)
    logger.debug("dim S_%s = %d", d, len(piece))
    return piece


def v_rho(fan: Fan, class_group: ClassGroup, rho: int) -> tuple[Monomial, ...]:
    """Basis of S_{deg x_rho}, where the rho-th component of a field lives."""
    return graded_piece(fan, class_group, class_group.ray_degree(rho))


def in_irrelevant_ideal(fan: Fan, monomial: Monomial) -> bool:
    """True iff some maximal cone's complement divides the monomial."""
    return any(
        all(monomial.exponents[rho] > 0 for rho in fan.complement(index))
        for index in range(len(fan.maxcones))
    )


@dataclass(frozen=True)
class SectionSpace:
    """
    Coordinates on the direct sum of the V_rho.

    A Cox derivation sum_rho f_rho d/dx_rho becomes one vector, V_0 first.
    """

    bases: tuple[tuple[Monomial, ...], ...]

    @functools.cached_property
    def offsets(self) -> tuple[int, ...]:
        offsets = [0]
        for basis in self.bases:
            offsets.append(offsets[-1] + len(basis))
        return tuple(offsets)

    @functools.cached_property
    def _positions(self) -> tuple[dict[Monomial, int], ...]:
        return tuple({m: i for i, m in enumerate(basis)} for basis in self.bases)

    @property
    def dimension(self) -> int:
        return self.offsets[-1]

    def index(self, rho: int, monomial: Monomial) -> int:
        return self.offsets[rho] + self._positions[rho][monomial]


@functools.cache
def section_space(fan: Fan, class_group: ClassGroup) -> SectionSpace:
    return SectionSpace(bases=tuple(v_rho(fan, class_group, rho) for rho in range(fan.n_rays)))


def euler_weights(class_group: ClassGroup) -> tuple[tuple[int, ...], ...]:
    """For each coordinate functional phi_j of Cl(X), the values phi_j(deg x_rho)."""
    return class_group.degree_matrix


def h0_tangent_dim(fan: Fan, class_group: ClassGroup) -> int:
    """
    dim H^0(X, T_X) = sum_rho dim V_rho - rank of the Euler relations.

    Each Euler relation sum_rho phi(deg x_rho) x_rho d/dx_rho is written in
    the coordinates of the direct sum of the V_rho; the rank is taken over Q.
    """
    space = section_space(fan, class_group)
    rows = []
    for weights in euler_weights(class_group):
        row = [0] * space.dimension
        for rho, weight in enumerate(weights):
            row[space.index(rho, Monomial.variable(fan.n_rays, rho))] = weight
        rows.append(row)
    rank = Matrix(rows).rank() if rows else 0
    return space.dimension - rank
