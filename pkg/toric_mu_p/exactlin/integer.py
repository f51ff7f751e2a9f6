"""Integer matrix normal forms.

Matrices are sympy ``ImmutableMatrix`` values with integer entries; the
reductions below run on plain Python integers so pivots never overflow.
"""

import logging
from collections.abc import Sequence
from typing import NamedTuple

from sympy import ImmutableMatrix, MatrixBase, eye

logger = logging.getLogger(__name__)

IntMatrix = ImmutableMatrix


class SmithDecomposition(NamedTuple):
    """A = U * S * V with U, V unimodular and S diagonal, d_i | d_{i+1}."""

    u: IntMatrix
    s: IntMatrix
    v: IntMatrix


def int_matrix(rows: Sequence[Sequence[int]] | MatrixBase) -> IntMatrix:
    """Builds an immutable integer matrix, rejecting non-integral entries."""
    if isinstance(rows, MatrixBase):
        matrix = ImmutableMatrix(rows)
    else:
        matrix = ImmutableMatrix([[int(x) for x in row] for row in rows])
    if not all(entry.is_integer for entry in matrix):
        raise ValueError("Matrix has non-integral entries.")
    return matrix


def _to_rows(matrix: MatrixBase) -> list[list[int]]:
    return [[int(matrix[i, j]) for j in range(matrix.cols)] for i in range(matrix.rows)]


def _identity_rows(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


class _SmithReducer:
    """Elementary row/column reduction keeping A = U * S * V at every step."""

    def __init__(self, a: list[list[int]], n_rows: int, n_cols: int) -> None:
        self.s = [row[:] for row in a]
        self.u = _identity_rows(n_rows)
        self.v = _identity_rows(n_cols)
        self.n_rows = n_rows
        self.n_cols = n_cols

    def swap_rows(self, i: int, j: int) -> None:
        if i == j:
            return
        self.s[i], self.s[j] = self.s[j], self.s[i]
        for row in self.u:
            row[i], row[j] = row[j], row[i]

    def swap_cols(self, i: int, j: int) -> None:
        if i == j:
            return
        for row in self.s:
            row[i], row[j] = row[j], row[i]
        self.v[i], self.v[j] = self.v[j], self.v[i]

    def add_row(self, target: int, source: int, factor: int) -> None:
        """row_target += factor * row_source."""
        self.s[target] = [a + factor * b for a, b in zip(self.s[target], self.s[source])]
        for row in self.u:
            row[source] -= factor * row[target]

    def add_col(self, target: int, source: int, factor: int) -> None:
        """col_target += factor * col_source."""
        for row in self.s:
            row[target] += factor * row[source]
        self.v[source] = [a - factor * b for a, b in zip(self.v[source], self.v[target])]

    def negate_row(self, i: int) -> None:
        self.s[i] = [-a for a in self.s[i]]
        for row in self.u:
            row[i] = -row[i]

    def smallest_entry(self, t: int) -> tuple[int, int] | None:
        best: tuple[int, int] | None = None
        for i in range(t, self.n_rows):
            for j in range(t, self.n_cols):
                value = self.s[i][j]
                if value and (best is None or abs(value) < abs(self.s[best[0]][best[1]])):
                    best = (i, j)
        return best

    def clear_pivot(self, t: int) -> bool:
        """Reduces row t and column t against the pivot; False if remainders are left."""
        pivot = self.s[t][t]
        clear = True
        for i in range(t + 1, self.n_rows):
            q = self.s[i][t] // pivot
            if q:
                self.add_row(i, t, -q)
            if self.s[i][t]:
                clear = False
        for j in range(t + 1, self.n_cols):
            q = self.s[t][j] // pivot
            if q:
                self.add_col(j, t, -q)
            if self.s[t][j]:
                clear = False
        return clear

    def non_divisible_row(self, t: int) -> int | None:
        pivot = self.s[t][t]
        for i in range(t + 1, self.n_rows):
            for j in range(t + 1, self.n_cols):
                if self.s[i][j] % pivot:
                    return i
        return None

    def reduce(self) -> None:
        for t in range(min(self.n_rows, self.n_cols)):
            while True:
                position = self.smallest_entry(t)
                if position is None:
                    return
                self.swap_rows(t, position[0])
                self.swap_cols(t, position[1])
                if not self.clear_pivot(t):
                    continue
                row = self.non_divisible_row(t)
                if row is None:
                    break
                self.add_row(t, row, 1)
            if self.s[t][t] < 0:
                self.negate_row(t)


def smith_normal_form(a: Sequence[Sequence[int]] | MatrixBase) -> SmithDecomposition:
    """
    Computes the Smith normal form of an integer matrix.

    Args:
        a: Integer matrix, as nested sequences or a sympy matrix.

    Returns:
        (U, S, V) with A = U * S * V, U and V unimodular, S diagonal with
        non-negative entries d_1 | d_2 | ...
    """
    matrix = int_matrix(a)
    reducer = _SmithReducer(_to_rows(matrix), matrix.rows, matrix.cols)
    reducer.reduce()
    u = ImmutableMatrix(reducer.u) if matrix.rows else ImmutableMatrix(eye(0))
    v = ImmutableMatrix(reducer.v) if matrix.cols else ImmutableMatrix(eye(0))
    s = ImmutableMatrix(matrix.rows, matrix.cols, [x for row in reducer.s for x in row])
    logger.debug("Smith normal form diagonal: %s", invariant_factors(s))
    return SmithDecomposition(u=u, s=s, v=v)


def invariant_factors(s: MatrixBase) -> tuple[int, ...]:
    """Diagonal entries of a Smith form."""
    return tuple(int(s[i, i]) for i in range(min(s.rows, s.cols)))


def hermite_rows(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """
    Row-style Hermite normal form of the integer row span.

    Returns the nonzero rows of the echelon form: pivots positive, entries
    above each pivot reduced into [0, pivot). Two generating sets span the
    same lattice iff their results are equal.
    """
    h = [[int(x) for x in row] for row in rows]
    if not h:
        return []
    n_cols = len(h[0])
    pivot_row = 0
    for col in range(n_cols):
        if pivot_row == len(h):
            break
        while True:
            candidates = [i for i in range(pivot_row, len(h)) if h[i][col]]
            if not candidates:
                break
            best = min(candidates, key=lambda i: abs(h[i][col]))
            h[pivot_row], h[best] = h[best], h[pivot_row]
            pivot = h[pivot_row][col]
            for i in range(pivot_row + 1, len(h)):
                q = h[i][col] // pivot
                if q:
                    h[i] = [a - q * b for a, b in zip(h[i], h[pivot_row])]
            if not any(h[i][col] for i in range(pivot_row + 1, len(h))):
                break
        if not h[pivot_row][col]:
            continue
        if h[pivot_row][col] < 0:
            h[pivot_row] = [-a for a in h[pivot_row]]
        pivot = h[pivot_row][col]
        for i in range(pivot_row):
            q = h[i][col] // pivot
            if q:
                h[i] = [a - q * b for a, b in zip(h[i], h[pivot_row])]
        pivot_row += 1
    return h[:pivot_row]


def is_unimodular(matrix: MatrixBase) -> bool:
    return matrix.is_square and abs(int(matrix.det())) == 1
