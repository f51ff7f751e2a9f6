import logging

import click

from toric_mu_p.commands import fan_group, quotient, sections, vf_group
from toric_mu_p.common import configure_logger

logger = logging.getLogger(__name__)


# Define the main group
@click.group()
@click.option(
    "--log-format",
    type=click.Choice(["text", "json"], case_sensitive=False),
    default="text",
    show_default=True,
    help="Format of log records written to stderr.",
)
@click.option("--verbose", "-v", is_flag=True, help="Log at DEBUG level.")
def cli(log_format: str, verbose: bool) -> None:
    """Quotients of smooth complete toric varieties by mu_p actions."""
    configure_logger(
        level=logging.DEBUG if verbose else logging.INFO,
        log_format=log_format.lower(),
    )


cli.add_command(fan_group)
cli.add_command(sections)
cli.add_command(vf_group)
cli.add_command(quotient)


if __name__ == "__main__":
    cli()
