"""Full-rank lattices in Q^n with a canonical column basis."""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from sympy import ImmutableMatrix, Rational, eye, ilcm

from toric_mu_p.exactlin.integer import hermite_rows

logger = logging.getLogger(__name__)

RationalVector = tuple[Fraction, ...]


def to_fraction(value: object) -> Fraction:
    """Converts ints, Fractions and sympy rationals to ``Fraction``."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    rational = Rational(value)
    return Fraction(int(rational.p), int(rational.q))


def _rational(value: object) -> Rational:
    fraction = to_fraction(value)
    return Rational(fraction.numerator, fraction.denominator)


@dataclass(frozen=True)
class Lattice:
    """
    A full-rank lattice L in Q^n.

    ``basis`` holds the basis vectors as columns. It is canonical: equal
    lattices always carry equal bases, so dataclass equality is lattice
    equality.
    """

    basis: ImmutableMatrix

    @classmethod
    def generated_by(cls, rank: int, generators: Iterable[Sequence[object]]) -> "Lattice":
        vectors = [tuple(_rational(x) for x in g) for g in generators]
        if any(len(v) != rank for v in vectors):
            raise ValueError(f"Lattice generators must have length {rank}.")
        denominator = reduce(ilcm, (x.q for v in vectors for x in v), 1)
        integral = [[int(x * denominator) for x in v] for v in vectors]
        echelon = hermite_rows(integral)
        if len(echelon) != rank:
            raise ValueError("Generators do not span a full-rank lattice.")
        basis = ImmutableMatrix(echelon).T / denominator
        return cls(basis=ImmutableMatrix(basis))

    @classmethod
    def standard(cls, rank: int) -> "Lattice":
        return cls(basis=ImmutableMatrix(eye(rank)))

    @property
    def rank(self) -> int:
        return self.basis.rows

    @property
    def columns(self) -> tuple[RationalVector, ...]:
        return tuple(
            tuple(to_fraction(self.basis[i, j]) for i in range(self.rank)) for j in range(self.rank)
        )

    @property
    def covolume(self) -> Fraction:
        return abs(to_fraction(self.basis.det()))

    @property
    def index(self) -> Fraction:
        """[L : Z^n] for an overlattice; a reciprocal for a sublattice."""
        return 1 / self.covolume

    def coordinates(self, vector: Sequence[object]) -> RationalVector:
        """Coordinates of ``vector`` in the canonical basis."""
        column = ImmutableMatrix([_rational(x) for x in vector])
        solved = self.basis.inv() * column
        return tuple(to_fraction(x) for x in solved)

    def contains(self, vector: Sequence[object]) -> bool:
        return all(c.denominator == 1 for c in self.coordinates(vector))

    def contains_standard(self) -> bool:
        """True iff Z^n is a sublattice, i.e. this is an overlattice."""
        return all(
            self.contains([int(i == j) for i in range(self.rank)]) for j in range(self.rank)
        )

    def integral_coordinates(self, vector: Sequence[object]) -> tuple[int, ...]:
        coordinates = self.coordinates(vector)
        if any(c.denominator != 1 for c in coordinates):
            raise ValueError(f"Vector {tuple(vector)} does not lie in the lattice.")
        return tuple(int(c) for c in coordinates)

    def __str__(self) -> str:
        cols = ", ".join("(" + ", ".join(str(x) for x in col) + ")" for col in self.columns)
        return f"Lattice[{cols}]"


def lattice_from_generators(n: int, generators: Iterable[Sequence[object]]) -> Lattice:
    """The overlattice Z^n + span_Z(generators)."""
    identity = [[int(i == j) for j in range(n)] for i in range(n)]
    lattice = Lattice.generated_by(n, [*identity, *generators])
    logger.debug("Overlattice %s has index %s", lattice, lattice.index)
    return lattice


def dual_lattice(lattice: Lattice) -> Lattice:
    """{m : <m, v> in Z for every v in the lattice}."""
    inverse_transpose = lattice.basis.inv().T
    generators = [
        [inverse_transpose[i, j] for i in range(lattice.rank)] for j in range(lattice.rank)
    ]
    return Lattice.generated_by(lattice.rank, generators)
