import logging
import sys

import click

from toric_mu_p.adapters.loaders import FanLoader
from toric_mu_p.adapters.report_writer import ReportWriter, dump_report
from toric_mu_p.commands.options import fail
from toric_mu_p.common.exceptions import EXIT_INVALID_FAN, ToricQuotientError
from toric_mu_p.coxring.class_group import class_group
from toric_mu_p.fan.predicates import diagnose
from toric_mu_p.quotient.pipeline import check_fan_structure

logger = logging.getLogger(__name__)


@click.group(name="fan")
def fan_group() -> None:
    """Inspect fans."""


@fan_group.command(name="check")
@click.argument("fan_source")
@click.option("--json", "as_json", is_flag=True, help="Print diagnostics as JSON.")
def check(fan_source: str, as_json: bool) -> None:
    """Reports whether FAN_SOURCE is a valid smooth complete (projective) fan."""
    try:
        fan = FanLoader(fan_source).load()
    except ToricQuotientError as e:
        fail(e)
    diagnostics = diagnose(fan)
    document = diagnostics.to_document()
    if as_json:
        click.echo(dump_report(document), nl=False)
    else:
        writer = ReportWriter({**document, "summary": diagnostics.summary()})
        click.echo(writer.render("fan_summary.txt.j2"), nl=False)
    if not (diagnostics.valid and diagnostics.smooth and diagnostics.complete):
        sys.exit(EXIT_INVALID_FAN)


@fan_group.command(name="classgroup")
@click.argument("fan_source")
def classgroup(fan_source: str) -> None:
    """Prints Cl(X) = Z^r and the degree of every Cox variable."""
    try:
        fan = FanLoader(fan_source).load()
        check_fan_structure(fan)
        cox = class_group(fan)
    except ToricQuotientError as e:
        fail(e)
    click.echo(f"Cl(X) = Z^{cox.rank}")
    for rho in range(fan.n_rays):
        degree = ", ".join(str(x) for x in cox.ray_degree(rho))
        click.echo(f"deg x{rho} = ({degree})")
