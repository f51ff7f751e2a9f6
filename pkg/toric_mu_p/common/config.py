"""Run configuration for the quotient command."""

from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, field_validator
from sympy import isprime

DEFAULT_DEGREE_BOUND = 6
DEFAULT_BOX_BOUND = 6


class RunConfig(BaseModel):
    """Validated options of one ``quotient`` run."""

    model_config = ConfigDict(extra="forbid")

    fan: str
    vector_field: str
    p: int | None = None
    e: int | None = Field(default=None, ge=1)
    degree_bound: int = Field(default=DEFAULT_DEGREE_BOUND, ge=1)
    box_bound: int = Field(default=DEFAULT_BOX_BOUND, ge=1)
    require_projective: bool = False
    skip_verify: bool = False
    rescale: bool = False
    out: Path | None = None
    expect: Path | None = None

    @field_validator("p")
    @classmethod
    def _prime(cls, value: int | None) -> int | None:
        if value is not None and not isprime(value):
            raise ValueError(f"p must be prime, got {value}")
        return value
