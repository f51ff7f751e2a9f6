import logging
from collections.abc import Generator
from pathlib import Path

import pytest
from click.testing import CliRunner

from tests.constants import P1, P1XP1, P2, hirzebruch
from toric_mu_p.coxring.class_group import ClassGroup, class_group
from toric_mu_p.exactlin.finite_field import FiniteField
from toric_mu_p.fan.model import Fan

RESOURCES = Path(__file__).parent / "resources"


@pytest.fixture(autouse=True)
def reset_package_logger() -> Generator[None, None, None]:
    """Drops handlers bound to streams of a finished CliRunner invocation."""
    yield
    logger = logging.getLogger("toric_mu_p")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)


@pytest.fixture
def runner() -> CliRunner:
    """Provides a CliRunner instance for CLI tests."""
    return CliRunner()


@pytest.fixture
def resources() -> Path:
    return RESOURCES


@pytest.fixture
def gf2() -> FiniteField:
    return FiniteField(2)


@pytest.fixture
def gf3() -> FiniteField:
    return FiniteField(3)


@pytest.fixture
def p1() -> Fan:
    return Fan.from_lists(**P1)


@pytest.fixture
def p2() -> Fan:
    return Fan.from_lists(**P2)


@pytest.fixture
def p1xp1() -> Fan:
    return Fan.from_lists(**P1XP1)


@pytest.fixture
def f1() -> Fan:
    return Fan.from_lists(**hirzebruch(1))


@pytest.fixture
def p2_cox(p2: Fan) -> ClassGroup:
    return class_group(p2)
