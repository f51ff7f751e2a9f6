"""Runs every verification check against one pipeline result."""

import logging

from toric_mu_p.oracle.checks.base import CheckResult, VerificationCheck, VerificationContext
from toric_mu_p.oracle.checks.chart_semigroup import ChartSemigroupCheck
from toric_mu_p.oracle.checks.graded_isomorphism import GradedIsomorphismCheck
from toric_mu_p.oracle.checks.localization import LocalizationCheck

logger = logging.getLogger(__name__)


class Verifier:
    """Applies the registered checks in sequence and collects their results."""

    def __init__(self, context: VerificationContext) -> None:
        """
        Initialize the verifier.

        Args:
            context: The pipeline run to verify.
        """
        self.context = context
        self._checks: list[VerificationCheck] = [
            GradedIsomorphismCheck(),
            LocalizationCheck(),
            ChartSemigroupCheck(),
        ]

    def run(self) -> list[CheckResult]:
        """
        Run all applicable checks.

        A check that raises is recorded as failed rather than aborting the
        remaining checks.

        Returns:
            The results, in check order.
        """
        results: list[CheckResult] = []
        for check in self._checks:
            if not check.can_run(self.context):
                continue
            try:
                results.extend(check.run(self.context))
            except Exception as e:
                logger.warning("Error in verification check %s: %s", check.name, str(e))
                results.append(CheckResult(name=check.name, passed=False, detail=str(e)))
        failed = [result.name for result in results if not result.passed]
        if failed:
            logger.warning("Verification failed: %s", ", ".join(failed))
        else:
            logger.info("All %d verification checks passed", len(results))
        return results
