import json
from pathlib import Path
from typing import Any

import pytest

from toric_mu_p.adapters.report_writer import ReportError, ReportWriter, dump_report
from toric_mu_p.common.exceptions import InputParseError, VerificationFailed
from toric_mu_p.fan.model import Fan
from toric_mu_p.fan.predicates import diagnose
from toric_mu_p.quotient.fan_quotient import quotient_fan


@pytest.fixture
def p2_document(p2: Fan) -> dict[str, Any]:
    return quotient_fan(p2, (0, 0, 1), 2).to_document()


def test_dump_report_is_deterministic() -> None:
    text = dump_report({"b": 1, "a": [1, 2]})

    assert text == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'


def test_render_quotient_summary(p2_document: dict[str, Any]) -> None:
    text = ReportWriter(p2_document).render("quotient_summary.txt.j2")

    assert text.startswith("mu_2 quotient over GF(2)\n")
    assert "  diagonal weights a: 0, 0, 1\n" in text
    assert "  overlattice N' basis: (1, 0), (0, 1/2)\n" in text
    assert "  index [N' : N] = 2\n" in text
    assert "    0: (-1, -2)\n" in text
    assert "    0, 1  (2)\n" in text
    assert text.endswith("  verification: skipped\n")


def test_render_fan_summary(p2: Fan) -> None:
    diagnostics = diagnose(p2)
    context = {**diagnostics.to_document(), "summary": diagnostics.summary()}

    text = ReportWriter(context).render("fan_summary.txt.j2")

    assert text.startswith("fan: smooth complete projective\n")
    assert "cone determinants: 1, 1, 1\n" in text


def test_render_missing_template(p2_document: dict[str, Any]) -> None:
    with pytest.raises(ReportError, match="not found"):
        ReportWriter(p2_document).render("missing.txt.j2")


def test_write_and_compare(tmp_path: Path, p2_document: dict[str, Any]) -> None:
    writer = ReportWriter(p2_document)

    path = writer.write_json(tmp_path / "reports" / "p2.json")

    assert json.loads(path.read_text(encoding="utf-8")) == p2_document
    writer.compare_with(path)


def test_compare_detects_difference(tmp_path: Path, p2_document: dict[str, Any]) -> None:
    golden = tmp_path / "golden.json"
    golden.write_text(dump_report({**p2_document, "overlattice_index": 3}), encoding="utf-8")

    with pytest.raises(VerificationFailed, match="differs from golden report"):
        ReportWriter(p2_document).compare_with(golden)


def test_compare_with_missing_golden(tmp_path: Path, p2_document: dict[str, Any]) -> None:
    with pytest.raises(InputParseError, match="Cannot read golden report"):
        ReportWriter(p2_document).compare_with(tmp_path / "absent.json")
