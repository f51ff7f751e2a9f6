import pytest

from tests.constants import (
    NON_PROJECTIVE,
    OVERLAPPING,
    P1,
    P1XP1,
    P2,
    P2_MISSING_CONE,
    WEIGHTED_P112,
    hirzebruch,
)
from toric_mu_p.common.exceptions import NotSmoothCone
from toric_mu_p.fan.charts import chart_frame
from toric_mu_p.fan.model import Fan
from toric_mu_p.fan.predicates import (
    ample_divisor,
    diagnose,
    is_complete,
    is_projective,
    is_smooth,
    validate,
)

SMOOTH_COMPLETE = [P1, P2, P1XP1, hirzebruch(1), hirzebruch(2), hirzebruch(3)]


@pytest.mark.parametrize("data", SMOOTH_COMPLETE)
def test_corpus_fans_are_smooth_complete_projective(data: dict) -> None:
    fan = Fan.from_lists(**data)

    assert validate(fan) == []
    assert is_smooth(fan)
    assert is_complete(fan)
    assert is_projective(fan)


def test_validate_reports_structural_problems() -> None:
    duplicate = Fan.from_lists(2, [[1, 0], [1, 0], [0, 1]], [[0, 2], [1, 2]])
    assert "rays 0 and 1 coincide" in validate(duplicate)

    not_primitive = Fan.from_lists(1, [[2], [-1]], [[0], [1]])
    assert "ray 0 [2] is not primitive" in validate(not_primitive)

    missing_ray = Fan.from_lists(2, [[1, 0], [0, 1]], [[0, 5]])
    assert "cone 0 refers to a missing ray" in validate(missing_ray)


def test_validate_rejects_overlapping_cones() -> None:
    violations = validate(Fan.from_lists(**OVERLAPPING))

    assert violations == ["cones 0 and 1 do not meet in a common face"]


def test_smoothness_and_completeness_are_independent() -> None:
    weighted = Fan.from_lists(**WEIGHTED_P112)
    assert validate(weighted) == []
    assert not is_smooth(weighted)
    assert is_complete(weighted)

    missing = Fan.from_lists(**P2_MISSING_CONE)
    assert validate(missing) == []
    assert is_smooth(missing)
    assert not is_complete(missing)


def test_non_projective_complete_fan() -> None:
    """The classical complete simplicial fan in rank 3 without an ample divisor."""
    fan = Fan.from_lists(**NON_PROJECTIVE)

    assert validate(fan) == []
    assert is_complete(fan)
    assert not is_smooth(fan)
    assert ample_divisor(fan) is None
    assert not is_projective(fan)


def test_ample_divisor_of_p2() -> None:
    """Normalized to vanish on the first cone, only D_0 carries weight."""
    divisor = ample_divisor(Fan.from_lists(**P2))

    assert divisor is not None
    assert divisor[0] >= 1
    assert divisor[1:] == (0, 0)


def test_diagnose() -> None:
    diagnostics = diagnose(Fan.from_lists(**hirzebruch(2)))

    assert diagnostics.valid
    assert diagnostics.summary() == "smooth complete projective"
    assert diagnostics.cone_determinants == [1, 1, 1, 1]
    document = diagnostics.to_document()
    assert document["projective"] is True
    assert len(document["ample_divisor"]) == 4

    invalid = diagnose(Fan.from_lists(**OVERLAPPING))
    assert invalid.summary() == "invalid"
    assert invalid.projective is None

    incomplete = diagnose(Fan.from_lists(**P2_MISSING_CONE))
    assert incomplete.summary() == "smooth incomplete"


def test_chart_frames_of_p2() -> None:
    fan = Fan.from_lists(**P2)

    first = chart_frame(fan, 0)
    assert first.cone == (1, 2)
    assert first.dual_basis == ((1, 0), (0, 1))
    assert first.exponents == ((-1, 1, 0), (-1, 0, 1))

    second = chart_frame(fan, 1)
    assert second.dual_basis == ((0, -1), (1, -1))
    assert second.exponents == ((1, 0, -1), (0, 1, -1))


def test_chart_frame_of_p1() -> None:
    fan = Fan.from_lists(**P1)

    assert chart_frame(fan, 0).exponents == ((1, -1),)
    assert chart_frame(fan, 1).exponents == ((-1, 1),)


def test_chart_frame_rejects_singular_cone() -> None:
    with pytest.raises(NotSmoothCone, match="determinant"):
        chart_frame(Fan.from_lists(**WEIGHTED_P112), 1)


def test_fan_model_helpers() -> None:
    fan = Fan.from_lists(**P1XP1)

    assert fan.n_rays == 4
    assert fan.class_rank == 2
    assert fan.complement(0) == (1, 3)
    assert fan.to_document() == P1XP1
