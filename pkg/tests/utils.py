import json
import logging
from pathlib import Path
from typing import Any

from click.testing import CliRunner, Result

from toric_mu_p.cli import cli
from toric_mu_p.coxring.polynomial import GradedPolynomial, Monomial
from toric_mu_p.derivation.cox_derivation import CoxDerivation
from toric_mu_p.exactlin.finite_field import FiniteField
from toric_mu_p.fan.model import Fan


def invoke_cli(runner: CliRunner, *args: str, env: dict[str, str] | None = None) -> Result:
    """Invokes the CLI with the given arguments, never catching exceptions silently."""
    # a handler left by an earlier invocation points at that run's closed stream
    package_logger = logging.getLogger("toric_mu_p")
    for handler in list(package_logger.handlers):
        package_logger.removeHandler(handler)
    return runner.invoke(cli, list(args), env=env, catch_exceptions=False)


def read_report(path: Path) -> dict[str, Any]:
    return json.loads(path.read_text(encoding="utf-8"))


def derivation_from_terms(fan: Fan, field: FiniteField, terms: list) -> CoxDerivation:
    """Terms as in tests.constants: per ray, a list of (exponents, coefficient)."""
    return CoxDerivation.from_terms(fan, field, [[(tuple(e), c) for e, c in ray] for ray in terms])


def linear_form(
    field: FiniteField, n_vars: int, coefficients: dict[int, int], degree: tuple[int, ...] = (1,)
) -> GradedPolynomial:
    """sum_i c_i x_i as a polynomial of the given degree."""
    return GradedPolynomial.from_terms(
        field,
        degree,
        [(Monomial.variable(n_vars, i), c) for i, c in coefficients.items()],
    )
