import logging
import sys
from typing import Any

import click
from click.core import ParameterSource
from pydantic import ValidationError

from toric_mu_p.adapters.loaders import FanLoader, VectorFieldLoader
from toric_mu_p.adapters.report_writer import ReportWriter
from toric_mu_p.commands.options import add_options, fail
from toric_mu_p.common.config import RunConfig
from toric_mu_p.common.exceptions import (
    EXIT_VERIFICATION_FAILED,
    InputParseError,
    ToricQuotientError,
)
from toric_mu_p.common.utils import parse_config_source
from toric_mu_p.coxring.class_group import class_group
from toric_mu_p.quotient.fan_quotient import QuotientReport
from toric_mu_p.quotient.pipeline import check_fan_structure, mu_p_quotient

logger = logging.getLogger(__name__)

# Options of the quotient command; RunConfig field names match the dest names.
quotient_options = [
    click.option("--p", "p", type=int, help="Characteristic, overriding the vector field file."),
    click.option("--ext", "e", type=int, help="Extension degree e of F_{p^e}, overriding the file."),
    click.option(
        "--bound",
        "degree_bound",
        type=int,
        default=6,
        show_default=True,
        envvar="TORIC_MU_P_BOUND",
        help="Degree box used by the graded-isomorphism and localization checks.",
    ),
    click.option(
        "--box-bound",
        "box_bound",
        type=int,
        default=6,
        show_default=True,
        envvar="TORIC_MU_P_BOX_BOUND",
        help="Coordinate box used by the chart semigroup check.",
    ),
    click.option(
        "--require-projective",
        is_flag=True,
        help="Fail with exit code 2 if the input fan is not projective.",
    ),
    click.option("--skip-verify", is_flag=True, help="Do not run the verification checks."),
    click.option(
        "--rescale",
        is_flag=True,
        help="Rescale a p-closed vector field with D^p = alpha D to D^p = D first.",
    ),
    click.option(
        "--out",
        type=click.Path(dir_okay=False, writable=True),
        help="Write the JSON report here instead of stdout.",
    ),
    click.option(
        "--expect",
        type=click.Path(exists=True, dir_okay=False),
        help="Golden JSON report; a mismatch exits with code 5.",
    ),
    click.option(
        "--config",
        "config_source",
        help="Run defaults as a JSON string or a JSON/YAML file path.",
    ),
]


def _build_config(ctx: click.Context, params: dict[str, Any]) -> RunConfig:
    """Merges config-file defaults under explicitly given command-line values."""
    try:
        defaults = parse_config_source(params.pop("config_source")) or {}
    except (ValueError, TypeError) as e:
        raise InputParseError(f"Invalid --config: {e}") from e
    values = dict(defaults)
    for name, value in params.items():
        source = ctx.get_parameter_source(name)
        explicit = source not in (ParameterSource.DEFAULT, ParameterSource.DEFAULT_MAP)
        if explicit or name not in values:
            values[name] = value
    try:
        return RunConfig(**values)
    except ValidationError as e:
        raise InputParseError(f"Invalid run configuration: {e}") from e


def _run(config: RunConfig) -> QuotientReport:
    fan = FanLoader(config.fan).load()
    check_fan_structure(fan)
    document = VectorFieldLoader(config.vector_field).load_and_validate()
    derivation = document.to_derivation(fan, config.p, config.e, class_group(fan))
    return mu_p_quotient(
        fan,
        derivation,
        require_projective=config.require_projective,
        rescale=config.rescale,
        skip_verify=config.skip_verify,
        degree_bound=config.degree_bound,
        box_bound=config.box_bound,
    )


@click.command()
@click.argument("fan_source")
@click.argument("vf_source")
@add_options(quotient_options)
@click.pass_context
def quotient(ctx: click.Context, fan_source: str, vf_source: str, **options: Any) -> None:
    """Computes the quotient fan of the variety of FAN_SOURCE by the mu_p action VF_SOURCE."""
    logger.info(
        "Starting quotient computation...",
        extra={"params": {"fan": fan_source, "vector_field": vf_source, **options}},
    )
    try:
        config = _build_config(ctx, {"fan": fan_source, "vector_field": vf_source, **options})
        report = _run(config)
        writer = ReportWriter(report.to_document())
        if config.out is not None:
            writer.write_json(config.out)
            click.echo(writer.render("quotient_summary.txt.j2"), nl=False)
        else:
            click.echo(writer.json_text(), nl=False)
            click.echo(writer.render("quotient_summary.txt.j2"), nl=False, err=True)
        if config.expect is not None:
            writer.compare_with(config.expect)
    except ToricQuotientError as e:
        logger.error("Quotient computation failed: %s", e)
        fail(e)

    if not report.verified:
        failed = [check.name for check in report.verification if not check.passed]
        click.echo(f"Error: verification failed: {', '.join(failed)}", err=True)
        sys.exit(EXIT_VERIFICATION_FAILED)
    logger.info("Quotient computation finished.", extra={"params": {"index": report.overlattice_index}})
