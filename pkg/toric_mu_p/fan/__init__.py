"""Fans: the data model, predicates and affine charts."""

from toric_mu_p.fan.charts import ChartFrame, chart_frame
from toric_mu_p.fan.model import Fan
from toric_mu_p.fan.predicates import (
    FanDiagnostics,
    ample_divisor,
    diagnose,
    is_complete,
    is_projective,
    is_smooth,
    validate,
)

__all__ = [
    "ChartFrame",
    "Fan",
    "FanDiagnostics",
    "ample_divisor",
    "chart_frame",
    "diagnose",
    "is_complete",
    "is_projective",
    "is_smooth",
    "validate",
]
