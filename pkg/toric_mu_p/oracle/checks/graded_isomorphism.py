"""S^D and S^{D'} agree degree by degree, where D' is the diagonal form."""

import logging
from typing import TYPE_CHECKING

from toric_mu_p.coxring.polynomial import GradedPolynomial
from toric_mu_p.coxring.sections import graded_piece
from toric_mu_p.derivation.cox_derivation import CoxDerivation, apply, piece_matrix
from toric_mu_p.exactlin.finite_field import fp_kernel, fp_rank
from toric_mu_p.oracle.checks.base import CheckResult, VerificationCheck, VerificationContext
from toric_mu_p.oracle.dimensions import constant_dim, diagonal_constant_dim, effective_classes

if TYPE_CHECKING:
    from toric_mu_p.quotient.diagonalize import Substitution

logger = logging.getLogger(__name__)

NAME = "graded_isomorphism"


def graded_isomorphism_check(
    derivation: CoxDerivation, substitution: "Substitution", bound: int
) -> CheckResult:
    """
    Compares ker(D) on S_d with the weight-zero monomials of the diagonal a.

    For every effective class d of height <= bound the two dimensions must
    agree, and Phi^-1 must carry a basis of ker(D on S_d) to independent
    elements killed by D' = sum a_rho x_rho d/dx_rho.
    """
    fan, cox, field = derivation.fan, derivation.class_group, derivation.field
    a = substitution.eigenvalues
    diagonal = CoxDerivation.diagonal(fan, field, a, cox)
    parameters = {"bound": bound, "diagonal_a": list(a)}
    for d in effective_classes(cox, bound):
        kernel_dim = constant_dim(derivation, d)
        weight_dim = diagonal_constant_dim(fan, cox, a, d, field.p)
        if kernel_dim != weight_dim:
            logger.warning("Dimension mismatch at class %s: %d vs %d", d, kernel_dim, weight_dim)
            return CheckResult(
                name=NAME,
                passed=False,
                parameters=parameters,
                counterexample={"class": list(d), "kernel_dim": kernel_dim, "weight_dim": weight_dim},
                detail="dim ker(D) differs from the diagonal count",
            )
        basis = graded_piece(fan, cox, d)
        if not basis:
            continue
        kernel = fp_kernel(piece_matrix(derivation, basis))
        images = []
        for vector in kernel:
            element = GradedPolynomial.from_terms(field, d, zip(basis, (int(x) for x in vector)))
            image = substitution.apply_inverse(element)
            if not apply(diagonal, image).is_zero:
                return CheckResult(
                    name=NAME,
                    passed=False,
                    parameters=parameters,
                    counterexample={"class": list(d), "element": str(element)},
                    detail="Phi^-1 maps a D-constant outside ker(D')",
                )
            coefficients = image.coefficients
            images.append([coefficients.get(m, 0) for m in basis])
        if images and fp_rank(field.matrix(images)) != len(images):
            return CheckResult(
                name=NAME,
                passed=False,
                parameters=parameters,
                counterexample={"class": list(d)},
                detail="Phi^-1 collapses independent D-constants",
            )
    return CheckResult(name=NAME, passed=True, parameters=parameters)


class GradedIsomorphismCheck(VerificationCheck):
    name = NAME

    def run(self, context: VerificationContext) -> list[CheckResult]:
        return [
            graded_isomorphism_check(context.derivation, context.substitution, context.degree_bound)
        ]
