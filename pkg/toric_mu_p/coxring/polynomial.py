"""Monomials and homogeneous polynomials of the Cox ring over a finite field."""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from toric_mu_p.exactlin.finite_field import FiniteField


@dataclass(frozen=True, order=True)
class Monomial:
    """x^e = prod_rho x_rho^{e_rho}."""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(x < 0 for x in self.exponents):
            raise ValueError(f"Monomial exponents must be non-negative: {self.exponents}")

    @classmethod
    def one(cls, n_vars: int) -> "Monomial":
        return cls((0,) * n_vars)

    @classmethod
    def variable(cls, n_vars: int, index: int) -> "Monomial":
        return cls(tuple(int(i == index) for i in range(n_vars)))

    @property
    def total_degree(self) -> int:
        return sum(self.exponents)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def lowered(self, index: int) -> "Monomial":
        """x^e / x_index; the exponent at ``index`` must be positive."""
        return Monomial(tuple(x - (i == index) for i, x in enumerate(self.exponents)))

    def __str__(self) -> str:
        factors = [
            f"x{i}" if x == 1 else f"x{i}^{x}" for i, x in enumerate(self.exponents) if x
        ]
        return "*".join(factors) or "1"


@dataclass(frozen=True)
class GradedPolynomial:
    """
    A homogeneous element of the Cox ring.

    ``terms`` is sorted by descending monomial and holds only nonzero
    coefficients, so structural equality is polynomial equality.
    """

    field: FiniteField
    degree: tuple[int, ...]
    terms: tuple[tuple[Monomial, int], ...]

    @classmethod
    def from_terms(
        cls,
        field: FiniteField,
        degree: Iterable[int],
        terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]],
    ) -> "GradedPolynomial":
        collected: dict[Monomial, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for monomial, coefficient in items:
            collected[monomial] = field.add(collected.get(monomial, 0), field.element(coefficient))
        ordered = sorted(
            ((m, c) for m, c in collected.items() if c), key=lambda term: term[0], reverse=True
        )
        return cls(field=field, degree=tuple(degree), terms=tuple(ordered))

    @classmethod
    def zero(cls, field: FiniteField, degree: Iterable[int]) -> "GradedPolynomial":
        return cls(field=field, degree=tuple(degree), terms=())

    @classmethod
    def monomial(
        cls, field: FiniteField, degree: Iterable[int], monomial: Monomial, coefficient: int = 1
    ) -> "GradedPolynomial":
        return cls.from_terms(field, degree, [(monomial, coefficient)])

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def coefficients(self) -> dict[Monomial, int]:
        return dict(self.terms)

    def coefficient(self, monomial: Monomial) -> int:
        return self.coefficients.get(monomial, 0)

    def _check_compatible(self, other: "GradedPolynomial") -> None:
        if other.field != self.field:
            raise ValueError(f"Field mismatch: {self.field} and {other.field}.")
        if other.degree != self.degree:
            raise ValueError(f"Degree mismatch: {self.degree} and {other.degree}.")

    def __add__(self, other: "GradedPolynomial") -> "GradedPolynomial":
        self._check_compatible(other)
        return GradedPolynomial.from_terms(self.field, self.degree, [*self.terms, *other.terms])

    def __neg__(self) -> "GradedPolynomial":
        return self.scale(self.field.neg(1))

    def __sub__(self, other: "GradedPolynomial") -> "GradedPolynomial":
        return self + (-other)

    def scale(self, factor: int) -> "GradedPolynomial":
        return GradedPolynomial.from_terms(
            self.field, self.degree, [(m, self.field.mul(c, factor)) for m, c in self.terms]
        )

    def __mul__(self, other: "GradedPolynomial") -> "GradedPolynomial":
        if other.field != self.field:
            raise ValueError(f"Field mismatch: {self.field} and {other.field}.")
        degree = tuple(a + b for a, b in zip(self.degree, other.degree))
        products = [
            (m1 * m2, self.field.mul(c1, c2)) for m1, c1 in self.terms for m2, c2 in other.terms
        ]
        return GradedPolynomial.from_terms(self.field, degree, products)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = [str(m) if c == 1 else f"{c}*{m}" for m, c in self.terms]
        return " + ".join(parts)
