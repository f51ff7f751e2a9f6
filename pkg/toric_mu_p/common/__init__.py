"""Common utilities and shared components for the toric-mu-p package."""

from toric_mu_p.common.decorators import pipeline_stage
from toric_mu_p.common.exceptions import (
    InputParseError,
    InvalidFanError,
    NotMuPError,
    ToricQuotientError,
    VerificationFailed,
)
from toric_mu_p.common.logger import configure_logger
from toric_mu_p.common.utils import parse_config_source

__all__ = [
    "InputParseError",
    "InvalidFanError",
    "NotMuPError",
    "ToricQuotientError",
    "VerificationFailed",
    "configure_logger",
    "parse_config_source",
    "pipeline_stage",
]
