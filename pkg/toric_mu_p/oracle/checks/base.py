"""Base types for verification checks."""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

from toric_mu_p.derivation.cox_derivation import CoxDerivation
from toric_mu_p.exactlin.lattice import Lattice
from toric_mu_p.fan.model import Fan

if TYPE_CHECKING:
    from toric_mu_p.quotient.diagonalize import Substitution

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one finite verification check."""

    name: str
    passed: bool
    parameters: dict[str, Any] = field(default_factory=dict)
    counterexample: Any = None
    detail: str = ""

    def to_document(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "parameters": self.parameters,
            "counterexample": self.counterexample,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class VerificationContext:
    """Everything the checks need about one pipeline run."""

    fan: Fan
    derivation: CoxDerivation
    substitution: "Substitution"
    overlattice: Lattice
    degree_bound: int = 6
    box_bound: int = 6

    @property
    def p(self) -> int:
        return self.derivation.field.p

    @property
    def diagonal(self) -> tuple[int, ...]:
        return self.substitution.eigenvalues


class VerificationCheck(ABC):
    """Base class for all verification checks."""

    name: str = "check"

    def can_run(self, context: VerificationContext) -> bool:
        """
        Check if this verification applies to the given run.

        Args:
            context: The run being verified

        Returns:
            True if the check should run, False otherwise
        """
        return True

    @abstractmethod
    def run(self, context: VerificationContext) -> list[CheckResult]:
        """
        Run the check.

        Args:
            context: The run being verified

        Returns:
            One result per instance checked
        """
        ...
