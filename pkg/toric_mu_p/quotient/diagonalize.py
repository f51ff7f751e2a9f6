"""Graded automorphisms that diagonalize a p-idempotent Cox derivation."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass

import galois

from toric_mu_p.common.exceptions import NoAutomorphismSelection, NotDiagonalizable
from toric_mu_p.coxring.polynomial import GradedPolynomial, Monomial
from toric_mu_p.coxring.sections import graded_piece
from toric_mu_p.derivation.cox_derivation import CoxDerivation, apply, p_power, piece_matrix
from toric_mu_p.exactlin.finite_field import (
    FiniteField,
    fp_eigendecompose,
    fp_inverse,
    fp_rank,
)

logger = logging.getLogger(__name__)

MAX_SELECTIONS = 10_000


def substitute(
    q: GradedPolynomial, images: Sequence[GradedPolynomial]
) -> GradedPolynomial:
    """q(images[0], images[1], ...)."""
    field = q.field
    result = GradedPolynomial.zero(field, q.degree)
    rank = len(q.degree)
    for monomial, coefficient in q.terms:
        product = GradedPolynomial.monomial(field, (0,) * rank, Monomial.one(len(images)))
        for rho, exponent in enumerate(monomial.exponents):
            for _ in range(exponent):
                product = product * images[rho]
        result = result + product.scale(coefficient)
    return result


@dataclass(frozen=True)
class Substitution:
    """
    A graded automorphism Phi of the Cox ring.

    ``images[rho]`` is Phi(x_rho), ``inverse_images[rho]`` is Phi^-1(x_rho),
    and Phi^-1(D(Phi(x_rho))) = eigenvalues[rho] * x_rho.
    """

    images: tuple[GradedPolynomial, ...]
    inverse_images: tuple[GradedPolynomial, ...]
    eigenvalues: tuple[int, ...]

    def apply(self, q: GradedPolynomial) -> GradedPolynomial:
        return substitute(q, self.images)

    def apply_inverse(self, q: GradedPolynomial) -> GradedPolynomial:
        return substitute(q, self.inverse_images)

    def to_document(self) -> dict[str, list[str]]:
        return {
            "images": [str(q) for q in self.images],
            "inverse_images": [str(q) for q in self.inverse_images],
        }


def _coordinates(polynomial: GradedPolynomial, basis: Sequence[Monomial]) -> list[int]:
    coefficients = polynomial.coefficients
    return [coefficients.get(m, 0) for m in basis]


def _candidates(
    field: FiniteField,
    spaces: dict[int, galois.FieldArray],
    basis: Sequence[Monomial],
    rho: int,
) -> list[tuple[tuple[int, ...], int]]:
    """
    Eigenvectors to try as Phi(x_rho), best first.

    Projections of x_rho onto each eigenspace come first, then the plain
    eigenspace basis vectors. Vectors with a nonzero x_rho coefficient are
    preferred and scaled so that coefficient is 1.
    """
    position = basis.index(Monomial.variable(len(basis[0].exponents), rho))
    eigenvalues = list(spaces)
    stacked = field.gf([list(map(int, v)) for c in eigenvalues for v in spaces[c]])
    unit = field.gf([int(i == position) for i in range(len(basis))])
    # rows of ``stacked`` form a basis, so x_rho = coords @ stacked
    coords = unit @ fp_inverse(stacked)
    raw: list[tuple[tuple[int, ...], int]] = []
    offset = 0
    for c in eigenvalues:
        size = spaces[c].shape[0]
        projection = coords[offset : offset + size] @ spaces[c]
        offset += size
        if any(int(x) for x in projection):
            raw.append((tuple(int(x) for x in projection), c))
    for c in eigenvalues:
        raw.extend((tuple(int(x) for x in v), c) for v in spaces[c])
    seen: set[tuple[int, ...]] = set()
    preferred: list[tuple[tuple[int, ...], int]] = []
    fallback: list[tuple[tuple[int, ...], int]] = []
    for vector, c in raw:
        lead = vector[position]
        if lead:
            scale = field.inv(lead)
            vector = tuple(field.mul(x, scale) for x in vector)
        if vector in seen:
            continue
        seen.add(vector)
        (preferred if lead else fallback).append((vector, c))
    return preferred + fallback


class _Selector:
    """Backtracking over eigenvector choices, one per ray."""

    def __init__(self, derivation: CoxDerivation) -> None:
        self.derivation = derivation
        self.field = derivation.field
        self.cox = derivation.class_group
        self.fan = derivation.fan
        self.degrees = list(dict.fromkeys(self.cox.ray_degrees()))
        self.bases = {d: graded_piece(self.fan, self.cox, d) for d in self.degrees}
        self.candidates: list[list[tuple[tuple[int, ...], int]]] = []
        for rho in range(self.fan.n_rays):
            d = self.cox.ray_degree(rho)
            basis = self.bases[d]
            spaces = fp_eigendecompose(piece_matrix(derivation, basis), self.field.p)
            logger.debug(
                "Degree %s eigenspace dimensions: %s",
                d,
                {c: space.shape[0] for c, space in spaces.items()},
            )
            self.candidates.append(_candidates(self.field, spaces, basis, rho))
        self.attempts = 0

    def _independent(self, choice: Sequence[tuple[tuple[int, ...], int]], rho: int) -> bool:
        d = self.cox.ray_degree(rho)
        same = [choice[s][0] for s in range(rho + 1) if self.cox.ray_degree(s) == d]
        return fp_rank(self.field.matrix(same)) == len(same)

    def _polynomial(self, rho: int, vector: tuple[int, ...]) -> GradedPolynomial:
        d = self.cox.ray_degree(rho)
        return GradedPolynomial.from_terms(self.field, d, zip(self.bases[d], vector))

    def _inverse(self, images: Sequence[GradedPolynomial]) -> tuple[GradedPolynomial, ...] | None:
        """Phi^-1(x_rho) for every rho, or None if Phi is not invertible."""
        inverse: list[GradedPolynomial | None] = [None] * self.fan.n_rays
        for d, basis in self.bases.items():
            matrix_columns = [
                _coordinates(substitute(GradedPolynomial.monomial(self.field, d, m), images), basis)
                for m in basis
            ]
            matrix = self.field.matrix([list(row) for row in zip(*matrix_columns)])
            if fp_rank(matrix) != len(basis):
                return None
            solved = fp_inverse(matrix)
            for rho in range(self.fan.n_rays):
                if self.cox.ray_degree(rho) != d:
                    continue
                position = basis.index(Monomial.variable(self.fan.n_rays, rho))
                column = [int(solved[i, position]) for i in range(len(basis))]
                inverse[rho] = GradedPolynomial.from_terms(self.field, d, zip(basis, column))
        return tuple(q for q in inverse if q is not None)

    def _search(
        self, choice: list[tuple[tuple[int, ...], int]]
    ) -> Substitution | None:
        rho = len(choice)
        if rho == self.fan.n_rays:
            self.attempts += 1
            if self.attempts > MAX_SELECTIONS:
                raise NoAutomorphismSelection(
                    f"Gave up after {MAX_SELECTIONS} eigenvector selections."
                )
            images = tuple(self._polynomial(s, vector) for s, (vector, _) in enumerate(choice))
            inverse = self._inverse(images)
            if inverse is None:
                return None
            return Substitution(
                images=images,
                inverse_images=inverse,
                eigenvalues=tuple(c for _, c in choice),
            )
        for candidate in self.candidates[rho]:
            choice.append(candidate)
            if self._independent(choice, rho):
                found = self._search(choice)
                if found is not None:
                    return found
            choice.pop()
        return None

    def select(self) -> Substitution:
        found = self._search([])
        if found is None:
            raise NoAutomorphismSelection("No eigenvector selection gives a graded automorphism.")
        logger.info("Selected eigenvalues %s after %d attempts", found.eigenvalues, self.attempts)
        return found


def _check(derivation: CoxDerivation, substitution: Substitution) -> None:
    for rho in range(derivation.fan.n_rays):
        x = derivation.variable(rho)
        if substitution.apply(substitution.apply_inverse(x)) != x:
            raise NoAutomorphismSelection(f"Phi(Phi^-1(x{rho})) differs from x{rho}.")
        if substitution.apply_inverse(substitution.apply(x)) != x:
            raise NoAutomorphismSelection(f"Phi^-1(Phi(x{rho})) differs from x{rho}.")
        conjugated = substitution.apply_inverse(apply(derivation, substitution.apply(x)))
        if conjugated != x.scale(substitution.eigenvalues[rho]):
            raise NotDiagonalizable(f"Conjugated field is not diagonal at x{rho}.")


def diagonalize(derivation: CoxDerivation) -> Substitution:
    """
    Finds Phi and a in F_p^k with Phi^-1 o D o Phi = sum_rho a_rho x_rho d/dx_rho.

    D must satisfy D^p = D exactly. On each generating degree D acts on the
    graded piece by a matrix M with M^p = M, which splits into eigenspaces;
    Phi(x_rho) is an eigenvector of eigenvalue a_rho, chosen so that the
    induced map on every generating piece is invertible.

    Raises:
        NotDiagonalizable: If D^p != D, or a block fails M^p = M.
        NoAutomorphismSelection: If no eigenvector choice is invertible.
    """
    if p_power(derivation) != derivation:
        raise NotDiagonalizable("D^p differs from D; run the exact lift first.")
    substitution = _Selector(derivation).select()
    _check(derivation, substitution)
    return substitution
