"""Dimensions of invariant graded pieces, computed two independent ways."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass

from toric_mu_p.coxring.class_group import ClassGroup
from toric_mu_p.coxring.sections import graded_piece
from toric_mu_p.derivation.cox_derivation import CoxDerivation, piece_matrix
from toric_mu_p.exactlin.finite_field import fp_rank
from toric_mu_p.fan.model import Fan

logger = logging.getLogger(__name__)

Degree = tuple[int, ...]


@dataclass(frozen=True)
class HilbertProfile:
    """dim (S_d)^D for each listed class d, in order of first appearance."""

    dimensions: tuple[tuple[Degree, int], ...]

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(dim for _, dim in self.dimensions)

    def to_document(self) -> list[dict[str, object]]:
        return [{"class": list(d), "dimension": dim} for d, dim in self.dimensions]


def effective_classes(class_group: ClassGroup, bound: int) -> tuple[Degree, ...]:
    """Classes of monomials of total degree <= bound, ordered by least total degree."""
    generators = list(dict.fromkeys(class_group.ray_degrees()))
    found: dict[Degree, None] = {(0,) * class_group.rank: None}
    frontier = list(found)
    for _ in range(bound):
        frontier = [
            tuple(a + b for a, b in zip(d, g)) for d in frontier for g in generators
        ]
        frontier = list(dict.fromkeys(frontier))
        for d in frontier:
            found.setdefault(d, None)
    return tuple(found)


def constant_dim(derivation: CoxDerivation, d: Sequence[int]) -> int:
    """dim ker(D on S_d), from the matrix of D on the monomial basis."""
    basis = graded_piece(derivation.fan, derivation.class_group, d)
    if not basis:
        return 0
    matrix = piece_matrix(derivation, basis)
    return len(basis) - fp_rank(matrix)


def diagonal_constant_dim(
    fan: Fan, class_group: ClassGroup, a: Sequence[int], d: Sequence[int], p: int
) -> int:
    """Number of monomials in S_d with sum_rho a_rho m_rho = 0 mod p."""
    basis = graded_piece(fan, class_group, d)
    return sum(
        1 for m in basis if sum(x * e for x, e in zip(a, m.exponents)) % p == 0
    )


def hilbert_profile(derivation: CoxDerivation, bound: int) -> HilbertProfile:
    classes = effective_classes(derivation.class_group, bound)
    return HilbertProfile(tuple((d, constant_dim(derivation, d)) for d in classes))


def diagonal_hilbert_profile(
    fan: Fan, class_group: ClassGroup, a: Sequence[int], p: int, bound: int
) -> HilbertProfile:
    classes = effective_classes(class_group, bound)
    return HilbertProfile(
        tuple((d, diagonal_constant_dim(fan, class_group, a, d, p)) for d in classes)
    )
