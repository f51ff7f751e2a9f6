"""Finite fields F_{p^e} and exact matrix work over them, backed by ``galois``.

Field elements travel through the package as plain ints in galois' integer
representation; the prime subfield F_p is exactly {0, ..., p-1}.
"""

import functools
import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

import galois
import numpy as np

from toric_mu_p.common.exceptions import NotIdempotentUnderP

logger = logging.getLogger(__name__)


@functools.cache
def _field_class(p: int, e: int) -> type[galois.FieldArray]:
    if e == 1:
        return galois.GF(p)
    irreducible = galois.irreducible_poly(p, e, method="min")
    logger.debug("Building GF(%d^%d) with modulus %s", p, e, irreducible)
    return galois.GF(p**e, irreducible_poly=irreducible)


@dataclass(frozen=True)
class FiniteField:
    """F_{p^e}, defined by the minimal irreducible polynomial of degree e."""

    p: int
    e: int = 1

    def __post_init__(self) -> None:
        if self.p < 2 or not galois.is_prime(self.p):
            raise ValueError(f"Characteristic must be prime, got {self.p}.")
        if self.e < 1:
            raise ValueError(f"Extension degree must be positive, got {self.e}.")

    @property
    def gf(self) -> type[galois.FieldArray]:
        return _field_class(self.p, self.e)

    @property
    def order(self) -> int:
        return self.p**self.e

    def from_int(self, value: int) -> int:
        """Image of an integer under Z -> F_p -> F_{p^e}."""
        return value % self.p

    def element(self, value: int) -> int:
        """Validates an integer-representation element of the field."""
        if self.e == 1:
            return value % self.p
        if not 0 <= value < self.order:
            raise ValueError(f"{value} is not an element of GF({self.p}^{self.e}).")
        return value

    def add(self, a: int, b: int) -> int:
        return int(self.gf(a) + self.gf(b))

    def sub(self, a: int, b: int) -> int:
        return int(self.gf(a) - self.gf(b))

    def neg(self, a: int) -> int:
        return int(-self.gf(a))

    def mul(self, a: int, b: int) -> int:
        return int(self.gf(a) * self.gf(b))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("Zero has no inverse.")
        return int(self.gf(1) / self.gf(a))

    def power(self, a: int, exponent: int) -> int:
        if a == 0:
            return int(exponent == 0)
        return int(self.gf(a) ** (exponent % (self.order - 1)))

    def elements(self) -> Iterator[int]:
        return iter(range(self.order))

    def in_prime_subfield(self, a: int) -> bool:
        return 0 <= a < self.p

    def matrix(self, rows: Sequence[Sequence[int]], n_cols: int | None = None) -> galois.FieldArray:
        """Matrix over the field; ``n_cols`` shapes the empty case."""
        if not rows:
            return self.gf.Zeros((0, n_cols or 0))
        return self.gf(np.array(rows, dtype=np.int64).reshape(len(rows), -1))

    def __str__(self) -> str:
        return f"GF({self.p})" if self.e == 1 else f"GF({self.p}^{self.e})"


def fp_rank(matrix: galois.FieldArray) -> int:
    if matrix.size == 0:
        return 0
    return int(np.linalg.matrix_rank(matrix))


def fp_kernel(matrix: galois.FieldArray) -> galois.FieldArray:
    """Rows form a basis of {x : matrix @ x = 0}."""
    field = type(matrix)
    n_cols = matrix.shape[1]
    if n_cols == 0:
        return field.Zeros((0, 0))
    if matrix.shape[0] == 0 or not matrix.view(np.ndarray).any():
        return field.Identity(n_cols)
    kernel = matrix.null_space()
    return kernel.reshape(-1, n_cols)


def fp_inverse(matrix: galois.FieldArray) -> galois.FieldArray:
    return np.linalg.inv(matrix)


def fp_matrix_power_equals(matrix: galois.FieldArray, p: int) -> bool:
    """True iff matrix^p == matrix."""
    power = matrix
    for _ in range(p - 1):
        power = power @ matrix
    return bool(np.array_equal(power.view(np.ndarray), matrix.view(np.ndarray)))


def fp_eigendecompose(matrix: galois.FieldArray, p: int) -> dict[int, galois.FieldArray]:
    """
    Splits an operator with M^p = M into eigenspaces.

    The minimal polynomial divides t^p - t, so M is diagonalizable with
    eigenvalues in F_p. Returns eigenvalue -> row basis of its eigenspace,
    omitting eigenvalues with trivial eigenspace.

    Raises:
        NotIdempotentUnderP: If M^p != M.
    """
    n = matrix.shape[0]
    if not fp_matrix_power_equals(matrix, p):
        raise NotIdempotentUnderP(f"Operator of size {n} does not satisfy M^p = M.")
    field = type(matrix)
    identity = field.Identity(n)
    spaces: dict[int, galois.FieldArray] = {}
    for c in range(p):
        space = fp_kernel(matrix - field(c) * identity)
        if space.shape[0]:
            spaces[c] = space
    total = sum(space.shape[0] for space in spaces.values())
    if total != n:
        raise NotIdempotentUnderP(f"Eigenspaces span dimension {total}, expected {n}.")
    return spaces
