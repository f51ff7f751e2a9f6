"""Adapter for writing JSON reports and rendering human summaries from templates."""

import json
import logging
from pathlib import Path
from typing import Any

import jinja2

from toric_mu_p.common.exceptions import InputParseError, ToricQuotientError, VerificationFailed

logger = logging.getLogger(__name__)


class ReportError(ToricQuotientError):
    """A report could not be rendered or written."""


def dump_report(document: dict[str, Any]) -> str:
    """Deterministic JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


class ReportWriter:
    """Handles rendering summaries and writing report files."""

    def __init__(self, context: dict[str, Any]) -> None:
        """
        Initialize the writer.

        Args:
            context: The report document, also used for template rendering.
        """
        self.context = context
        self.template_dir = Path(__file__).parent.parent / "templates"
        self.env: jinja2.Environment | None = None

    def _setup_environment(self) -> jinja2.Environment:
        """
        Initialize the Jinja2 template environment.

        Raises:
            ReportError: If the template directory is not found.
        """
        if self.env is not None:
            return self.env
        if not self.template_dir.is_dir():
            raise ReportError(f"Template directory not found at {self.template_dir}")
        self.env = jinja2.Environment(
            loader=jinja2.FileSystemLoader(self.template_dir),
            autoescape=jinja2.select_autoescape(["html", "xml"]),
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True,
        )
        return self.env

    def render(self, template_name: str) -> str:
        """
        Render one template against the report context.

        Raises:
            ReportError: If the template is missing or fails to render.
        """
        env = self._setup_environment()
        try:
            return env.get_template(template_name).render(self.context)
        except jinja2.TemplateNotFound as e:
            raise ReportError(
                f"Required template '{template_name}' not found in {self.template_dir}."
            ) from e
        except jinja2.TemplateError as e:
            raise ReportError(f"Error rendering template '{template_name}': {e}") from e

    def json_text(self) -> str:
        return dump_report(self.context)

    def write_json(self, output_file: str | Path) -> Path:
        """
        Write the JSON report.

        Raises:
            ReportError: If the file cannot be written.
        """
        path = Path(output_file)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(self.json_text(), encoding="utf-8")
        except OSError as e:
            raise ReportError(f"Error writing report to '{path}': {e}") from e
        logger.info("Report written to %s", path)
        return path

    def compare_with(self, golden_file: str | Path) -> None:
        """
        Compare the JSON report byte-for-byte with a golden report.

        Raises:
            InputParseError: If the golden report cannot be read.
            VerificationFailed: If the reports differ.
        """
        path = Path(golden_file)
        try:
            expected = path.read_text(encoding="utf-8")
        except OSError as e:
            raise InputParseError(f"Cannot read golden report '{path}': {e}") from e
        if expected != self.json_text():
            raise VerificationFailed(f"Report differs from golden report '{path}'.")
        logger.info("Report matches golden report %s", path)
