"""The fan data model."""

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from sympy import ImmutableMatrix


@dataclass(frozen=True)
class Fan:
    """
    A fan in N_R = R^rank given by primitive ray generators and maximal cones.

    Rays are indexed 0..k-1; the Cox variable x_rho belongs to ray rho. The
    constructor only normalizes shapes; ``validate`` reports violations.
    """

    rank: int
    rays: tuple[tuple[int, ...], ...]
    maxcones: tuple[tuple[int, ...], ...]

    @classmethod
    def from_lists(
        cls, rank: int, rays: Sequence[Sequence[int]], maxcones: Sequence[Sequence[int]]
    ) -> "Fan":
        return cls(
            rank=int(rank),
            rays=tuple(tuple(int(x) for x in ray) for ray in rays),
            maxcones=tuple(tuple(int(i) for i in cone) for cone in maxcones),
        )

    @property
    def n_rays(self) -> int:
        return len(self.rays)

    @property
    def class_rank(self) -> int:
        """Rank of the class group of a smooth complete fan."""
        return self.n_rays - self.rank

    def ray_matrix(self) -> ImmutableMatrix:
        """k x n matrix whose rows are the ray generators."""
        return ImmutableMatrix(self.n_rays, self.rank, [x for ray in self.rays for x in ray])

    def cone_matrix(self, cone_index: int) -> ImmutableMatrix:
        """Rows are the generators of one maximal cone, in the listed order."""
        cone = self.maxcones[cone_index]
        return ImmutableMatrix([list(self.rays[rho]) for rho in cone])

    def cone_determinant(self, cone_index: int) -> int:
        return abs(int(self.cone_matrix(cone_index).det()))

    def complement(self, cone_index: int) -> tuple[int, ...]:
        """Rays outside one maximal cone."""
        cone = set(self.maxcones[cone_index])
        return tuple(rho for rho in range(self.n_rays) if rho not in cone)

    def to_document(self) -> dict[str, Any]:
        return {
            "rank": self.rank,
            "rays": [list(ray) for ray in self.rays],
            "maxcones": [list(cone) for cone in self.maxcones],
        }
