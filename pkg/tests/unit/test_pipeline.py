from fractions import Fraction

import numpy as np
import pytest
from pytest_mock import MockerFixture

from tests.constants import (
    OVERLAPPING,
    P1_ROTATION_TERMS,
    P1_SHIFT_TERMS,
    P2_MISSING_CONE,
    P2_QUOTIENT_DETERMINANTS,
    WEIGHTED_P112,
)
from tests.utils import derivation_from_terms
from toric_mu_p.common.exceptions import (
    InvalidFanError,
    NeedsFieldExtension,
    NotComplete,
    NotMuP,
    NotProjective,
    NotSmoothCone,
)
from toric_mu_p.derivation.cox_derivation import CoxDerivation
from toric_mu_p.exactlin.finite_field import FiniteField
from toric_mu_p.exactlin.lattice import lattice_from_generators
from toric_mu_p.fan.model import Fan
from toric_mu_p.oracle.checks.base import CheckResult
from toric_mu_p.quotient.pipeline import check_fan_structure, check_hypotheses, mu_p_quotient


def test_quotient_of_p2_is_verified(p2: Fan, gf2: FiniteField) -> None:
    report = mu_p_quotient(p2, CoxDerivation.diagonal(p2, gf2, [0, 0, 1]))

    assert report.overlattice_index == 2
    assert list(report.cone_determinants) == P2_QUOTIENT_DETERMINANTS
    assert report.projective is True
    assert report.e == 1
    assert report.verified
    assert {result.name for result in report.verification} == {
        "graded_isomorphism",
        "localization",
        "chart_semigroup",
    }


def test_quotient_of_shift_field_on_p1(p1: Fan, gf2: FiniteField) -> None:
    report = mu_p_quotient(p1, derivation_from_terms(p1, gf2, P1_SHIFT_TERMS), degree_bound=4)

    assert report.diagonal_a == (0, 1)
    assert report.substitution is not None
    assert report.to_document()["substitution"]["images"] == ["x0", "x0 + x1"]
    assert report.overlattice_index == 2
    assert report.verified


def test_involution_of_p1_has_p1_quotient(p1: Fan, gf2: FiniteField) -> None:
    """x0 d/dx0 in characteristic 2: N' = (1/2)Z and the quotient is P^1 again."""
    report = mu_p_quotient(p1, CoxDerivation.diagonal(p1, gf2, [1, 0]))

    assert report.diagonal_a in {(1, 0), (0, 1)}
    assert report.overlattice == lattice_from_generators(1, [(Fraction(1, 2),)])
    assert report.overlattice_index == 2
    assert report.quotient == p1
    assert report.cone_determinants == (1, 1)
    assert report.verified


def test_skip_verify_leaves_verification_empty(p2: Fan, gf2: FiniteField) -> None:
    report = mu_p_quotient(p2, CoxDerivation.diagonal(p2, gf2, [0, 0, 1]), skip_verify=True)

    assert report.verification == []
    assert report.verified


def test_euler_field_fails_mu_p_stage(p2: Fan, gf2: FiniteField) -> None:
    with pytest.raises(NotMuP) as exc_info:
        mu_p_quotient(p2, CoxDerivation.diagonal(p2, gf2, [1, 1, 1]))

    assert exc_info.value.stage == "is_mu_p"
    assert exc_info.value.exit_code == 3


def test_rotation_needs_extension_when_rescaling(p1: Fan, gf3: FiniteField) -> None:
    derivation = derivation_from_terms(p1, gf3, P1_ROTATION_TERMS)

    with pytest.raises(NeedsFieldExtension) as exc_info:
        mu_p_quotient(p1, derivation, rescale=True)

    assert exc_info.value.stage == "rescale"
    assert exc_info.value.minimal_degree == 2


def test_rotation_without_rescale_is_not_mu_p(p1: Fan, gf3: FiniteField) -> None:
    with pytest.raises(NotMuP) as exc_info:
        mu_p_quotient(p1, derivation_from_terms(p1, gf3, P1_ROTATION_TERMS))

    assert exc_info.value.stage == "is_mu_p"


def test_rotation_over_extension_field(p1: Fan) -> None:
    derivation = derivation_from_terms(p1, FiniteField(3, 2), P1_ROTATION_TERMS)

    report = mu_p_quotient(p1, derivation, rescale=True, degree_bound=3, box_bound=3)

    assert report.e == 2
    assert report.overlattice_index == 3
    assert sorted(report.diagonal_a) == [1, 2]
    assert report.verified


@pytest.mark.parametrize(
    ("fan_lists", "error", "stage"),
    [
        (OVERLAPPING, InvalidFanError, "validate"),
        (WEIGHTED_P112, NotSmoothCone, "is_smooth"),
        (P2_MISSING_CONE, NotComplete, "is_complete"),
    ],
)
def test_fan_hypotheses(fan_lists: dict, error: type[Exception], stage: str) -> None:
    with pytest.raises(error) as exc_info:
        check_hypotheses(Fan.from_lists(**fan_lists))

    assert exc_info.value.stage == stage
    assert exc_info.value.exit_code == 2


def test_projectivity_is_only_enforced_on_request(p2: Fan, mocker: MockerFixture) -> None:
    mocker.patch("toric_mu_p.quotient.pipeline.is_projective", return_value=False)

    assert check_hypotheses(p2) is False
    with pytest.raises(NotProjective) as exc_info:
        check_hypotheses(p2, require_projective=True)
    assert exc_info.value.stage == "is_projective"


def test_failed_check_is_recorded(p2: Fan, gf2: FiniteField, mocker: MockerFixture) -> None:
    failed = CheckResult(name="localization", passed=False, detail="weight rule and derivation disagree")
    mocker.patch("toric_mu_p.quotient.pipeline.Verifier.run", return_value=[failed])

    report = mu_p_quotient(p2, CoxDerivation.diagonal(p2, gf2, [0, 0, 1]))

    assert report.verification == [failed]
    assert not report.verified


@pytest.mark.parametrize("seed", [0, 1, 2, 3, 4])
def test_conjugated_diagonal_field_has_the_same_quotient(
    p2: Fan, gf2: FiniteField, seed: int
) -> None:
    """G diag(0, 0, 1) G^-1 for a random invertible G over F_2 still halves one cone."""
    rng = np.random.default_rng(seed)
    while True:
        g = gf2.gf(rng.integers(0, 2, size=(3, 3)))
        if np.linalg.matrix_rank(g) == 3:
            break
    m = g @ gf2.gf(np.diag([0, 0, 1])) @ np.linalg.inv(g)
    terms = [
        [(tuple(int(s == sigma) for s in range(3)), int(m[sigma, rho])) for sigma in range(3)]
        for rho in range(3)
    ]

    report = mu_p_quotient(
        p2, CoxDerivation.from_terms(p2, gf2, terms), degree_bound=4, box_bound=4
    )

    assert report.overlattice_index == 2
    assert sorted(report.cone_determinants) == [1, 1, 2]
    assert sorted(report.diagonal_a) == [0, 0, 1]
    assert report.verified


@pytest.mark.parametrize("p", [2, 3, 5])
def test_quotient_of_p1_for_small_primes(p1: Fan, p: int) -> None:
    report = mu_p_quotient(p1, CoxDerivation.diagonal(p1, FiniteField(p), [0, 1]))

    assert report.quotient == p1
    assert report.overlattice_index == p
    assert report.verified


@pytest.mark.parametrize("p", [2, 3])
def test_shift_field_matches_diagonal_quotient(p1: Fan, p: int) -> None:
    field = FiniteField(p)
    shifted = mu_p_quotient(p1, derivation_from_terms(p1, field, P1_SHIFT_TERMS))
    diagonal = mu_p_quotient(p1, CoxDerivation.diagonal(p1, field, [0, 1]))

    assert shifted.diagonal_a == (0, 1)
    assert shifted.quotient == diagonal.quotient
    assert shifted.overlattice == diagonal.overlattice
    assert shifted.verified


def test_fan_structure_check_skips_projectivity(p2: Fan, mocker: MockerFixture) -> None:
    projective = mocker.patch("toric_mu_p.quotient.pipeline.is_projective")

    check_fan_structure(p2)
    with pytest.raises(NotSmoothCone) as exc_info:
        check_fan_structure(Fan.from_lists(**WEIGHTED_P112))

    assert exc_info.value.stage == "is_smooth"
    projective.assert_not_called()
