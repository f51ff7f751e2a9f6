import pytest

from tests.constants import P1, P1XP1, P2, hirzebruch
from toric_mu_p.common.exceptions import InvalidClassError, NotComplete
from toric_mu_p.coxring.class_group import class_group
from toric_mu_p.coxring.polynomial import GradedPolynomial, Monomial
from toric_mu_p.coxring.sections import (
    euler_weights,
    graded_piece,
    h0_tangent_dim,
    in_irrelevant_ideal,
    section_space,
    v_rho,
)
from toric_mu_p.exactlin.finite_field import FiniteField
from toric_mu_p.exactlin.polyhedra import Inequality, lattice_points
from toric_mu_p.fan.model import Fan


@pytest.mark.parametrize(
    ("data", "expected"),
    [
        (P1, 3),
        (P2, 8),
        (P1XP1, 6),
        (hirzebruch(1), 6),
        (hirzebruch(2), 7),
        (hirzebruch(3), 8),
    ],
)
def test_h0_tangent_dim(data: dict, expected: int) -> None:
    fan = Fan.from_lists(**data)

    assert h0_tangent_dim(fan, class_group(fan)) == expected


def _demazure_roots(fan: Fan) -> list[tuple[int, ...]]:
    """Characters m with <m, u_rho> = -1 for one ray and >= 0 for every other."""
    roots = []
    for rho, ray in enumerate(fan.rays):
        system = [
            Inequality.of(other, int(sigma == rho)) for sigma, other in enumerate(fan.rays)
        ]
        roots.extend(
            m
            for m in lattice_points(system, fan.rank)
            if sum(x * y for x, y in zip(m, ray)) == -1
        )
    return roots


@pytest.mark.parametrize("data", [P1, P2, P1XP1, hirzebruch(1), hirzebruch(2), hirzebruch(3)])
def test_h0_tangent_dim_counts_torus_and_demazure_roots(data: dict) -> None:
    """dim H^0(T_X) = rank N + number of Demazure roots, counted independently."""
    fan = Fan.from_lists(**data)

    assert h0_tangent_dim(fan, class_group(fan)) == fan.rank + len(_demazure_roots(fan))


def test_graded_piece_of_p2(p2: Fan) -> None:
    cox = class_group(p2)
    piece = graded_piece(p2, cox, (2,))

    assert len(piece) == 6
    assert piece[0] == Monomial((2, 0, 0))
    assert piece[-1] == Monomial((0, 0, 2))
    assert graded_piece(p2, cox, (2,), representative=(0, 0, 2)) == piece
    assert graded_piece(p2, cox, (-1,)) == ()
    assert graded_piece(p2, cox, (0,)) == (Monomial.one(3),)


def test_graded_piece_of_p1xp1(p1xp1: Fan) -> None:
    piece = graded_piece(p1xp1, class_group(p1xp1), (1, 1))

    assert [str(m) for m in piece] == ["x0*x2", "x0*x3", "x1*x2", "x1*x3"]


def test_graded_piece_of_hirzebruch() -> None:
    fan = Fan.from_lists(**hirzebruch(2))
    cox = class_group(fan)

    assert len(v_rho(fan, cox, 3)) == 4
    assert len(v_rho(fan, cox, 1)) == 1


def test_graded_piece_rejects_wrong_representative(p2: Fan) -> None:
    with pytest.raises(InvalidClassError, match="does not have class"):
        graded_piece(p2, class_group(p2), (2,), representative=(1, 0, 0))


def test_graded_piece_of_non_complete_fan() -> None:
    plane = Fan.from_lists(2, [[1, 0], [0, 1]], [[0, 1]])

    with pytest.raises(NotComplete):
        graded_piece(plane, class_group(plane), ())


def test_irrelevant_ideal(p2: Fan, p1xp1: Fan) -> None:
    assert in_irrelevant_ideal(p2, Monomial((1, 0, 0)))
    assert not in_irrelevant_ideal(p2, Monomial.one(3))
    assert not in_irrelevant_ideal(p1xp1, Monomial((1, 1, 0, 0)))
    assert in_irrelevant_ideal(p1xp1, Monomial((1, 0, 1, 0)))


def test_section_space_layout(p2: Fan) -> None:
    space = section_space(p2, class_group(p2))

    assert space.offsets == (0, 3, 6, 9)
    assert space.dimension == 9
    assert space.index(1, Monomial((0, 0, 1))) == 5


def test_euler_weights(p1xp1: Fan) -> None:
    assert euler_weights(class_group(p1xp1)) == ((1, 1, 0, 0), (0, 0, 1, 1))


def test_monomial_basics() -> None:
    m = Monomial((2, 0, 1))

    assert str(m) == "x0^2*x2"
    assert str(Monomial.one(2)) == "1"
    assert m.total_degree == 3
    assert m.lowered(0) == Monomial((1, 0, 1))
    assert m * Monomial.variable(3, 1) == Monomial((2, 1, 1))
    assert Monomial((1, 0)) > Monomial((0, 5))
    with pytest.raises(ValueError, match="non-negative"):
        Monomial((-1, 0))


def test_graded_polynomial_arithmetic(gf3: FiniteField) -> None:
    x0 = GradedPolynomial.monomial(gf3, (1,), Monomial((1, 0)))
    x1 = GradedPolynomial.monomial(gf3, (1,), Monomial((0, 1)))

    difference = x1 - x0
    assert str(difference) == "2*x0 + x1"
    assert (difference + x0) == x1
    assert (x0 - x0).is_zero
    square = difference * difference
    assert square.degree == (2,)
    assert square.coefficient(Monomial((1, 1))) == 1
    assert str(GradedPolynomial.zero(gf3, (1,))) == "0"


def test_graded_polynomial_rejects_mismatches(gf2: FiniteField, gf3: FiniteField) -> None:
    x0 = GradedPolynomial.monomial(gf3, (1,), Monomial((1, 0)))

    with pytest.raises(ValueError, match="Degree mismatch"):
        x0 + GradedPolynomial.monomial(gf3, (2,), Monomial((2, 0)))
    with pytest.raises(ValueError, match="Field mismatch"):
        x0 + GradedPolynomial.monomial(gf2, (1,), Monomial((1, 0)))
