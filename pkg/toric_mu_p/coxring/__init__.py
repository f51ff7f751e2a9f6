"""The Cox ring: class group grading, monomials and graded pieces."""

from toric_mu_p.coxring.class_group import ClassGroup, class_group
from toric_mu_p.coxring.polynomial import GradedPolynomial, Monomial
from toric_mu_p.coxring.sections import (
    SectionSpace,
    euler_weights,
    graded_piece,
    h0_tangent_dim,
    in_irrelevant_ideal,
    section_space,
    v_rho,
)

__all__ = [
    "ClassGroup",
    "GradedPolynomial",
    "Monomial",
    "SectionSpace",
    "class_group",
    "euler_weights",
    "graded_piece",
    "h0_tangent_dim",
    "in_irrelevant_ideal",
    "section_space",
    "v_rho",
]
