"""Exact Fourier-Motzkin elimination over Q.

A system is a sequence of ``Inequality`` values, each meaning
``sum_j coefficients[j] * x_j + constant >= 0``. Elimination runs from the
last variable to the first, so bounds for x_0 are available first when
walking back up.
"""

import logging
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction

logger = logging.getLogger(__name__)


class UnboundedRegion(ValueError):
    """A variable has no bound in one direction over a non-empty region."""


@dataclass(frozen=True)
class Inequality:
    coefficients: tuple[Fraction, ...]
    constant: Fraction

    @classmethod
    def of(cls, coefficients: Sequence[object], constant: object = 0) -> "Inequality":
        return cls(tuple(Fraction(c) for c in coefficients), Fraction(constant))

    @property
    def is_constant(self) -> bool:
        return not any(self.coefficients)

    def normalized(self) -> "Inequality":
        scale = max((abs(c) for c in self.coefficients), default=Fraction(0))
        if not scale:
            return Inequality(self.coefficients, Fraction((self.constant > 0) - (self.constant < 0)))
        return Inequality(tuple(c / scale for c in self.coefficients), self.constant / scale)

    def combine(self, other: "Inequality", index: int) -> "Inequality":
        """Positive combination cancelling variable ``index``; self must be the lower side."""
        upper_weight = self.coefficients[index]
        lower_weight = -other.coefficients[index]
        coefficients = tuple(
            a * lower_weight + b * upper_weight
            for a, b in zip(self.coefficients, other.coefficients)
        )
        constant = self.constant * lower_weight + other.constant * upper_weight
        return Inequality(coefficients, constant)

    def slack(self, point: Sequence[Fraction]) -> Fraction:
        return sum((c * x for c, x in zip(self.coefficients, point)), self.constant)


def eliminate(system: Sequence[Inequality], index: int) -> list[Inequality]:
    """Projects out variable ``index``; the result has coefficient 0 there."""
    kept: dict[Inequality, None] = {}
    lower = [ineq for ineq in system if ineq.coefficients[index] > 0]
    upper = [ineq for ineq in system if ineq.coefficients[index] < 0]
    produced = [ineq for ineq in system if ineq.coefficients[index] == 0]
    produced.extend(lo.combine(up, index) for lo in lower for up in upper)
    for ineq in produced:
        normalized = ineq.normalized()
        if normalized.is_constant and normalized.constant >= 0:
            continue
        kept[normalized] = None
    return list(kept)


def _projections(system: Sequence[Inequality], n_vars: int) -> list[list[Inequality]]:
    """projections[j] involves only x_0 .. x_{j-1}."""
    projections: list[list[Inequality]] = [[] for _ in range(n_vars + 1)]
    projections[n_vars] = list(system)
    for j in range(n_vars, 0, -1):
        projections[j - 1] = eliminate(projections[j], j - 1)
        logger.debug("Eliminated x_%d, %d inequalities remain", j - 1, len(projections[j - 1]))
    return projections


def is_feasible(system: Sequence[Inequality], n_vars: int) -> bool:
    return all(ineq.constant >= 0 for ineq in _projections(system, n_vars)[0])


def _bounds(
    system: Sequence[Inequality], index: int, prefix: Sequence[Fraction]
) -> tuple[Fraction | None, Fraction | None]:
    low: Fraction | None = None
    high: Fraction | None = None
    for ineq in system:
        c = ineq.coefficients[index]
        if not c:
            continue
        rest = ineq.constant + sum(
            (a * x for a, x in zip(ineq.coefficients[:index], prefix)), Fraction(0)
        )
        bound = -rest / c
        if c > 0:
            low = bound if low is None else max(low, bound)
        else:
            high = bound if high is None else min(high, bound)
    return low, high


def feasible_point(system: Sequence[Inequality], n_vars: int) -> tuple[Fraction, ...] | None:
    """Some rational solution, or None when the system is infeasible."""
    projections = _projections(system, n_vars)
    if not all(ineq.constant >= 0 for ineq in projections[0]):
        return None
    point: list[Fraction] = []
    for j in range(1, n_vars + 1):
        low, high = _bounds(projections[j], j - 1, point)
        if low is not None:
            value = Fraction(math.ceil(low))
            if high is not None and value > high:
                value = low
        elif high is not None:
            value = Fraction(math.floor(high))
        else:
            value = Fraction(0)
        point.append(value)
    return tuple(point)


def lattice_points(system: Sequence[Inequality], n_vars: int) -> list[tuple[int, ...]]:
    """
    All integer solutions of a bounded system, in lexicographic order.

    Raises:
        UnboundedRegion: If the solution set is non-empty and unbounded.
    """
    projections = _projections(system, n_vars)
    if not all(ineq.constant >= 0 for ineq in projections[0]):
        return []
    for j in range(1, n_vars + 1):
        signs = {ineq.coefficients[j - 1] > 0 for ineq in projections[j] if ineq.coefficients[j - 1]}
        if signs != {True, False}:
            raise UnboundedRegion(f"Variable x_{j - 1} is unbounded.")

    def walk(prefix: list[int]) -> Iterator[tuple[int, ...]]:
        j = len(prefix) + 1
        if j > n_vars:
            yield tuple(prefix)
            return
        low, high = _bounds(projections[j], j - 1, [Fraction(x) for x in prefix])
        assert low is not None and high is not None
        for value in range(math.ceil(low), math.floor(high) + 1):
            yield from walk([*prefix, value])

    return list(walk([]))
