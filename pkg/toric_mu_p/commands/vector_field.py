import logging
import sys

import click

from toric_mu_p.adapters.loaders import FanLoader, VectorFieldLoader
from toric_mu_p.commands.options import fail
from toric_mu_p.common.exceptions import EXIT_NOT_MU_P, ToricQuotientError
from toric_mu_p.coxring.class_group import class_group
from toric_mu_p.coxring.sections import h0_tangent_dim
from toric_mu_p.derivation.cox_derivation import is_mu_p, p_power
from toric_mu_p.quotient.pipeline import check_fan_structure
from toric_mu_p.quotient.rescale import scalar_ratio

logger = logging.getLogger(__name__)


@click.group(name="vf")
def vf_group() -> None:
    """Inspect Cox-ring vector fields."""


@vf_group.command(name="check")
@click.argument("fan_source")
@click.argument("vf_source")
@click.option("--p", "p", type=int, help="Characteristic, overriding the file.")
@click.option("--ext", "e", type=int, help="Extension degree e of F_{p^e}, overriding the file.")
def check(fan_source: str, vf_source: str, p: int | None, e: int | None) -> None:
    """Reports whether VF_SOURCE defines a mu_p action on the variety of FAN_SOURCE."""
    try:
        fan = FanLoader(fan_source).load()
        check_fan_structure(fan)
        cox = class_group(fan)
        document = VectorFieldLoader(vf_source).load_and_validate()
        derivation = document.to_derivation(fan, p, e, cox)
        power = p_power(derivation)
        mu_p = is_mu_p(derivation)
        ratio = None if derivation.is_zero else scalar_ratio(derivation, power)
    except ToricQuotientError as error:
        fail(error)
    click.echo(f"field: {derivation.field}")
    click.echo(f"h0(T_X) = {h0_tangent_dim(fan, cox)}")
    click.echo(f"D = {derivation}")
    click.echo(f"D^p = D exactly: {'yes' if power == derivation else 'no'}")
    if ratio is not None:
        click.echo(f"D^p = {ratio} * D")
    click.echo(f"mu_p action: {'yes' if mu_p else 'no'}")
    diagonal = derivation.diagonal_coefficients()
    if diagonal is not None:
        click.echo(f"diagonal weights: {', '.join(str(a) for a in diagonal)}")
    if not mu_p:
        logger.info("Vector field does not define a mu_p action", extra={"params": {"p": derivation.field.p}})
        sys.exit(EXIT_NOT_MU_P)
