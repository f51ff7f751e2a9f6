"""Homogeneous degree-zero derivations of the Cox ring, modulo Euler relations."""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import galois

from toric_mu_p.common.exceptions import NotMuP
from toric_mu_p.coxring.class_group import ClassGroup, class_group
from toric_mu_p.coxring.polynomial import GradedPolynomial, Monomial
from toric_mu_p.coxring.sections import euler_weights, section_space
from toric_mu_p.exactlin.finite_field import FiniteField, fp_kernel
from toric_mu_p.fan.model import Fan

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoxDerivation:
    """
    D = sum_rho f_rho d/dx_rho with f_rho in S_{deg x_rho} over F_{p^e}.

    Degree zero means D maps S_d to S_d for every class d.
    """

    fan: Fan
    class_group: ClassGroup
    field: FiniteField
    components: tuple[GradedPolynomial, ...]

    def __post_init__(self) -> None:
        if len(self.components) != self.fan.n_rays:
            raise ValueError(
                f"Derivation has {len(self.components)} components, expected {self.fan.n_rays}."
            )
        for rho, component in enumerate(self.components):
            if component.degree != self.class_group.ray_degree(rho):
                raise ValueError(
                    f"Component {rho} has degree {component.degree}, "
                    f"expected {self.class_group.ray_degree(rho)}."
                )
            if component.field != self.field:
                raise ValueError(f"Component {rho} lives over {component.field}, not {self.field}.")

    @classmethod
    def from_terms(
        cls,
        fan: Fan,
        field: FiniteField,
        terms: Sequence[Iterable[tuple[Sequence[int], int]]],
        cox: ClassGroup | None = None,
    ) -> "CoxDerivation":
        """Builds D from per-ray lists of (exponent vector, coefficient)."""
        cox = cox or class_group(fan)
        components = tuple(
            GradedPolynomial.from_terms(
                field,
                cox.ray_degree(rho),
                [(Monomial(tuple(int(x) for x in exponents)), c) for exponents, c in ray_terms],
            )
            for rho, ray_terms in enumerate(terms)
        )
        for rho, component in enumerate(components):
            for monomial, _ in component.terms:
                if cox.degree(monomial.exponents) != cox.ray_degree(rho):
                    raise ValueError(
                        f"Monomial {monomial} in component {rho} has degree "
                        f"{cox.degree(monomial.exponents)}, expected {cox.ray_degree(rho)}."
                    )
        return cls(fan=fan, class_group=cox, field=field, components=components)

    @classmethod
    def diagonal(
        cls, fan: Fan, field: FiniteField, a: Sequence[int], cox: ClassGroup | None = None
    ) -> "CoxDerivation":
        """sum_rho a_rho x_rho d/dx_rho."""
        if len(a) != fan.n_rays:
            raise ValueError(f"Diagonal has {len(a)} entries, expected {fan.n_rays}.")
        terms = [[(Monomial.variable(fan.n_rays, rho).exponents, a_rho)] for rho, a_rho in enumerate(a)]
        return cls.from_terms(fan, field, terms, cox)

    @classmethod
    def zero(cls, fan: Fan, field: FiniteField, cox: ClassGroup | None = None) -> "CoxDerivation":
        return cls.from_terms(fan, field, [[] for _ in range(fan.n_rays)], cox)

    def _with_components(self, components: Iterable[GradedPolynomial]) -> "CoxDerivation":
        return CoxDerivation(
            fan=self.fan, class_group=self.class_group, field=self.field, components=tuple(components)
        )

    def __add__(self, other: "CoxDerivation") -> "CoxDerivation":
        return self._with_components(a + b for a, b in zip(self.components, other.components))

    def __sub__(self, other: "CoxDerivation") -> "CoxDerivation":
        return self._with_components(a - b for a, b in zip(self.components, other.components))

    def scale(self, factor: int) -> "CoxDerivation":
        return self._with_components(c.scale(factor) for c in self.components)

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.components)

    def diagonal_coefficients(self) -> tuple[int, ...] | None:
        """The a_rho when D = sum a_rho x_rho d/dx_rho, otherwise None."""
        coefficients = []
        for rho, component in enumerate(self.components):
            variable = Monomial.variable(self.fan.n_rays, rho)
            if any(m != variable for m, _ in component.terms):
                return None
            coefficients.append(component.coefficient(variable))
        return tuple(coefficients)

    def variable(self, rho: int) -> GradedPolynomial:
        return GradedPolynomial.monomial(
            self.field, self.class_group.ray_degree(rho), Monomial.variable(self.fan.n_rays, rho)
        )

    def vector(self) -> list[int]:
        """Coordinates in the direct sum of the V_rho."""
        space = section_space(self.fan, self.class_group)
        vector = [0] * space.dimension
        for rho, component in enumerate(self.components):
            for monomial, coefficient in component.terms:
                vector[space.index(rho, monomial)] = coefficient
        return vector

    def __call__(self, q: GradedPolynomial) -> GradedPolynomial:
        return apply(self, q)

    def __str__(self) -> str:
        parts = [f"({c})*d/dx{rho}" for rho, c in enumerate(self.components) if not c.is_zero]
        return " + ".join(parts) or "0"


def apply(derivation: CoxDerivation, q: GradedPolynomial) -> GradedPolynomial:
    """D(q) by the Leibniz rule; the result keeps the degree of q."""
    field = derivation.field
    result: dict[Monomial, int] = {}
    for monomial, coefficient in q.terms:
        for rho, exponent in enumerate(monomial.exponents):
            if not exponent:
                continue
            factor = field.mul(field.from_int(exponent), coefficient)
            if not factor:
                continue
            lowered = monomial.lowered(rho)
            for term, term_coefficient in derivation.components[rho].terms:
                product = term * lowered
                result[product] = field.add(result.get(product, 0), field.mul(factor, term_coefficient))
    return GradedPolynomial.from_terms(field, q.degree, result)


def p_power(derivation: CoxDerivation) -> CoxDerivation:
    """D^p, again a derivation in characteristic p."""
    components = []
    for rho in range(derivation.fan.n_rays):
        image = derivation.variable(rho)
        for _ in range(derivation.field.p):
            image = apply(derivation, image)
        components.append(image)
    return derivation._with_components(components)


@dataclass(frozen=True)
class EulerElement:
    """The Euler field sum_rho phi(deg x_rho) x_rho d/dx_rho of a functional phi on Cl(X)."""

    phi: tuple[int, ...]
    weights: tuple[int, ...]

    def as_derivation(
        self, fan: Fan, field: FiniteField, cox: ClassGroup | None = None
    ) -> CoxDerivation:
        return CoxDerivation.diagonal(fan, field, [field.from_int(w) for w in self.weights], cox)


def euler_basis(fan: Fan, cox: ClassGroup) -> tuple[EulerElement, ...]:
    """One Euler field per coordinate functional of Cl(X) = Z^r."""
    return tuple(
        EulerElement(phi=tuple(int(i == j) for i in range(cox.rank)), weights=weights)
        for j, weights in enumerate(euler_weights(cox))
    )


def equals_mod_euler(first: CoxDerivation, second: CoxDerivation) -> bool:
    """True iff first - second lies in the F-span of the Euler fields."""
    difference = first - second
    if difference.is_zero:
        return True
    field = first.field
    columns = [
        element.as_derivation(first.fan, field, first.class_group).vector()
        for element in euler_basis(first.fan, first.class_group)
    ]
    columns.append(difference.vector())
    rows = [list(row) for row in zip(*columns)]
    kernel = fp_kernel(field.matrix(rows, len(columns)))
    return any(int(vector[-1]) != 0 for vector in kernel)


def is_mu_p(derivation: CoxDerivation) -> bool:
    """D^p == D modulo Euler relations and D is nonzero modulo Euler relations."""
    zero = CoxDerivation.zero(derivation.fan, derivation.field, derivation.class_group)
    if equals_mod_euler(derivation, zero):
        return False
    return equals_mod_euler(p_power(derivation), derivation)


def require_mu_p(derivation: CoxDerivation) -> None:
    """
    Raises:
        NotMuP: If D does not define a mu_p action.
    """
    zero = CoxDerivation.zero(derivation.fan, derivation.field, derivation.class_group)
    if equals_mod_euler(derivation, zero):
        raise NotMuP("Vector field is zero modulo Euler relations.")
    if not equals_mod_euler(p_power(derivation), derivation):
        raise NotMuP("D^p is not congruent to D modulo Euler relations.")
    logger.info("Vector field defines a mu_%d action", derivation.field.p)


def piece_matrix(derivation: CoxDerivation, basis: Sequence[Monomial]) -> galois.FieldArray:
    """Matrix of D on span(basis); column j holds the coordinates of D(basis[j])."""
    field = derivation.field
    degree = derivation.class_group.degree(basis[0].exponents)
    position = {m: i for i, m in enumerate(basis)}
    columns = []
    for monomial in basis:
        image = apply(derivation, GradedPolynomial.monomial(field, degree, monomial))
        column = [0] * len(basis)
        for term, coefficient in image.terms:
            column[position[term]] = coefficient
        columns.append(column)
    return field.matrix([list(row) for row in zip(*columns)])
