import logging

import click

from toric_mu_p.adapters.loaders import FanLoader
from toric_mu_p.commands.options import fail, parse_int_list
from toric_mu_p.common.exceptions import ToricQuotientError
from toric_mu_p.coxring.class_group import class_group
from toric_mu_p.coxring.sections import graded_piece
from toric_mu_p.quotient.pipeline import check_fan_structure

logger = logging.getLogger(__name__)


@click.command()
@click.argument("fan_source")
@click.option(
    "--class",
    "class_",
    required=True,
    help="Divisor class as comma-separated integers, e.g. '1,0'.",
)
def sections(fan_source: str, class_: str) -> None:
    """Lists the monomial basis of the graded piece S_d of the Cox ring."""
    d = parse_int_list(class_)
    try:
        fan = FanLoader(fan_source).load()
        check_fan_structure(fan)
        basis = graded_piece(fan, class_group(fan), d)
    except ToricQuotientError as e:
        fail(e)
    click.echo(f"dim S_({', '.join(str(x) for x in d)}) = {len(basis)}")
    for monomial in basis:
        click.echo(str(monomial))
