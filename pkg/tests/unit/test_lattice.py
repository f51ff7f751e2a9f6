from fractions import Fraction

import numpy as np
import pytest

from toric_mu_p.exactlin.lattice import (
    Lattice,
    dual_lattice,
    lattice_from_generators,
    to_fraction,
)


def test_overlattice_of_half_vector() -> None:
    """Z^2 + Z (0, 1/2) has basis (1, 0), (0, 1/2) and index 2."""
    lattice = lattice_from_generators(2, [(0, Fraction(1, 2))])

    assert lattice.columns == ((1, 0), (0, Fraction(1, 2)))
    assert lattice.index == 2
    assert lattice.contains_standard()


def test_basis_is_canonical() -> None:
    """Equal lattices compare equal whatever generators built them."""
    first = lattice_from_generators(2, [(0, Fraction(1, 2))])
    second = lattice_from_generators(2, [(0, Fraction(-1, 2)), (3, Fraction(5, 2))])

    assert first == second
    assert hash(first) == hash(second)
    assert Lattice.generated_by(2, [[1, 0], [0, 1]]) == Lattice.standard(2)


def test_membership_and_coordinates() -> None:
    lattice = lattice_from_generators(2, [(Fraction(2, 3), Fraction(1, 3))])

    assert lattice.index == 3
    assert lattice.contains((Fraction(-1, 3), Fraction(1, 3)))
    assert not lattice.contains((Fraction(1, 3), 0))
    assert lattice.contains((5, -7))


def test_integral_coordinates() -> None:
    lattice = lattice_from_generators(2, [(0, Fraction(1, 2))])

    assert lattice.integral_coordinates((-1, -1)) == (-1, -2)
    with pytest.raises(ValueError, match="does not lie"):
        lattice.integral_coordinates((Fraction(1, 2), 0))


def test_dual_lattice() -> None:
    """The dual of an index-2 overlattice is an index-2 sublattice."""
    lattice = lattice_from_generators(2, [(0, Fraction(1, 2))])
    dual = dual_lattice(lattice)

    assert dual.contains((1, 0))
    assert dual.contains((0, 2))
    assert not dual.contains((0, 1))
    assert dual.index == Fraction(1, 2)
    assert dual_lattice(Lattice.standard(3)) == Lattice.standard(3)


def test_generated_by_rejects_degenerate_generators() -> None:
    with pytest.raises(ValueError, match="full-rank"):
        Lattice.generated_by(2, [[1, 1], [2, 2]])
    with pytest.raises(ValueError, match="length 2"):
        Lattice.generated_by(2, [[1, 0, 0]])


def test_to_fraction_and_str() -> None:
    lattice = lattice_from_generators(1, [(Fraction(1, 3),)])

    assert to_fraction(lattice.basis[0, 0]) == Fraction(1, 3)
    assert str(lattice) == "Lattice[(1/3)]"


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_dual_exchanges_fractional_and_scaled_integers(p: int) -> None:
    """(1/p)Z and pZ are dual to each other."""
    fine = lattice_from_generators(1, [(Fraction(1, p),)])
    coarse = Lattice.generated_by(1, [[p]])

    assert dual_lattice(fine) == coarse
    assert dual_lattice(coarse) == fine


@pytest.mark.parametrize(
    "lattice",
    [
        lattice_from_generators(2, [(Fraction(2, 3), Fraction(1, 3))]),
        lattice_from_generators(
            3, [(Fraction(1, 2), 0, Fraction(1, 2)), (0, Fraction(1, 3), Fraction(1, 3))]
        ),
        Lattice.generated_by(2, [[2, 1], [0, 3]]),
        Lattice.generated_by(2, [[Fraction(1, 2), 1], [3, Fraction(5, 4)]]),
    ],
)
def test_double_dual_is_the_lattice(lattice: Lattice) -> None:
    dual = dual_lattice(lattice)

    assert dual_lattice(dual) == lattice
    assert dual.index == 1 / lattice.index


def test_lattice_from_generators_ignores_order_and_repetition() -> None:
    rng = np.random.default_rng(7)

    for _ in range(50):
        generators = [
            tuple(Fraction(int(rng.integers(-6, 7)), int(rng.integers(1, 7))) for _ in range(2))
            for _ in range(3)
        ]
        lattice = lattice_from_generators(2, generators)

        assert lattice_from_generators(2, [generators[i] for i in rng.permutation(3)]) == lattice
        assert lattice_from_generators(2, lattice.columns) == lattice
        assert lattice_from_generators(2, [*generators, *lattice.columns]) == lattice
        assert dual_lattice(dual_lattice(lattice)) == lattice
