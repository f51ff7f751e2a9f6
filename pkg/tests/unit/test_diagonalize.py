import pytest

from tests.constants import P1_NILPOTENT_TERMS, P1_ROTATION_TERMS, P1_SHIFT_TERMS
from tests.utils import derivation_from_terms, linear_form
from toric_mu_p.common.exceptions import NotDiagonalizable
from toric_mu_p.coxring.polynomial import Monomial
from toric_mu_p.derivation.cox_derivation import CoxDerivation, apply
from toric_mu_p.exactlin.finite_field import FiniteField
from toric_mu_p.fan.model import Fan
from toric_mu_p.quotient.diagonalize import diagonalize, substitute


def test_diagonalize_shift_on_p1(p1: Fan, gf2: FiniteField) -> None:
    """Phi(x0) = x0, Phi(x1) = x0 + x1 turns (x0 + x1) d/dx1 into x1 d/dx1."""
    derivation = derivation_from_terms(p1, gf2, P1_SHIFT_TERMS)

    substitution = diagonalize(derivation)

    assert substitution.eigenvalues == (0, 1)
    assert [str(q) for q in substitution.images] == ["x0", "x0 + x1"]
    x0 = linear_form(gf2, 2, {0: 1})
    x1 = linear_form(gf2, 2, {1: 1})
    assert substitution.inverse_images[1] == x1 - x0


def test_diagonalize_shift_in_characteristic_three(p1: Fan, gf3: FiniteField) -> None:
    derivation = derivation_from_terms(p1, gf3, P1_SHIFT_TERMS)

    substitution = diagonalize(derivation)

    assert substitution.eigenvalues == (0, 1)
    assert substitution.to_document() == {
        "images": ["x0", "x0 + x1"],
        "inverse_images": ["x0", "2*x0 + x1"],
    }


def test_conjugation_identity(p1: Fan, gf3: FiniteField) -> None:
    """Phi^-1(D(Phi(x_rho))) = a_rho x_rho."""
    derivation = derivation_from_terms(p1, gf3, P1_SHIFT_TERMS)
    substitution = diagonalize(derivation)

    for rho, a in enumerate(substitution.eigenvalues):
        x = derivation.variable(rho)
        conjugated = substitution.apply_inverse(apply(derivation, substitution.apply(x)))
        assert conjugated == x.scale(a)


def test_diagonal_field_gets_identity(p2: Fan, gf2: FiniteField) -> None:
    derivation = CoxDerivation.diagonal(p2, gf2, [0, 0, 1])

    substitution = diagonalize(derivation)

    assert substitution.eigenvalues == (0, 0, 1)
    assert [str(q) for q in substitution.images] == ["x0", "x1", "x2"]


def test_diagonalize_hirzebruch_with_mixed_degree(f1: Fan, gf2: FiniteField) -> None:
    """x3 -> x3 + x1 x0 on F_1 mixes the generator x3 with a product of degree (1, 1)."""
    derivation = CoxDerivation.from_terms(
        f1, gf2, [[], [], [], [((1, 1, 0, 0), 1), ((0, 0, 0, 1), 1)]]
    )

    substitution = diagonalize(derivation)

    assert substitution.eigenvalues[3] == 1
    assert substitution.images[3].coefficient(Monomial((0, 0, 0, 1))) == 1
    for rho, a in enumerate(substitution.eigenvalues):
        x = derivation.variable(rho)
        assert substitution.apply_inverse(apply(derivation, substitution.apply(x))) == x.scale(a)


def test_diagonalize_requires_exact_idempotent(p1: Fan, gf3: FiniteField) -> None:
    derivation = derivation_from_terms(p1, gf3, P1_ROTATION_TERMS)

    with pytest.raises(NotDiagonalizable, match="exact lift"):
        diagonalize(derivation)


def test_substitute(gf3: FiniteField) -> None:
    x0 = linear_form(gf3, 2, {0: 1})
    x1 = linear_form(gf3, 2, {1: 1})
    product = x0 * x1

    result = substitute(product, [x0, x0 + x1])

    assert result == x0 * x0 + x0 * x1


def test_diagonalize_rejects_nilpotent_field(p1: Fan, gf2: FiniteField) -> None:
    derivation = derivation_from_terms(p1, gf2, P1_NILPOTENT_TERMS)

    with pytest.raises(NotDiagonalizable):
        diagonalize(derivation)
