"""Fan predicates: validity, smoothness, completeness and projectivity."""

import logging
import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import combinations
from typing import Any

from toric_mu_p.exactlin.lattice import to_fraction
from toric_mu_p.exactlin.polyhedra import Inequality, feasible_point, is_feasible
from toric_mu_p.fan.model import Fan

logger = logging.getLogger(__name__)


def _structural_violations(fan: Fan) -> list[str]:
    violations: list[str] = []
    if fan.rank < 1:
        return [f"rank must be positive, got {fan.rank}"]
    if not fan.rays:
        violations.append("fan has no rays")
    for rho, ray in enumerate(fan.rays):
        if len(ray) != fan.rank:
            violations.append(f"ray {rho} has length {len(ray)}, expected {fan.rank}")
        elif not any(ray):
            violations.append(f"ray {rho} is zero")
        elif reduce(math.gcd, ray, 0) != 1:
            violations.append(f"ray {rho} {list(ray)} is not primitive")
    for rho, other in combinations(range(fan.n_rays), 2):
        if fan.rays[rho] == fan.rays[other]:
            violations.append(f"rays {rho} and {other} coincide")
    if not fan.maxcones:
        violations.append("fan has no maximal cones")
    seen: set[frozenset[int]] = set()
    for index, cone in enumerate(fan.maxcones):
        if len(cone) != fan.rank:
            violations.append(f"cone {index} has {len(cone)} rays, expected {fan.rank}")
        if any(not 0 <= rho < fan.n_rays for rho in cone):
            violations.append(f"cone {index} refers to a missing ray")
            continue
        if len(set(cone)) != len(cone):
            violations.append(f"cone {index} repeats a ray")
        if frozenset(cone) in seen:
            violations.append(f"cone {index} is listed twice")
        seen.add(frozenset(cone))
    used = {rho for cone in fan.maxcones for rho in cone}
    for rho in range(fan.n_rays):
        if rho not in used:
            violations.append(f"ray {rho} lies in no maximal cone")
    return violations


def _separation_system(fan: Fan, first: tuple[int, ...], second: tuple[int, ...]) -> list[Inequality]:
    """m with <m,u> = 0 on shared rays, >= 1 on first only, <= -1 on second only."""
    shared = set(first) & set(second)
    system: list[Inequality] = []
    for rho in shared:
        ray = fan.rays[rho]
        system.append(Inequality.of(ray, 0))
        system.append(Inequality.of([-x for x in ray], 0))
    for rho in set(first) - shared:
        system.append(Inequality.of(fan.rays[rho], -1))
    for rho in set(second) - shared:
        system.append(Inequality.of([-x for x in fan.rays[rho]], -1))
    return system


def validate(fan: Fan) -> list[str]:
    """
    Checks that the data describes a simplicial fan.

    Returns:
        Human-readable violations; empty when the fan is valid.
    """
    violations = _structural_violations(fan)
    if violations:
        return violations
    for index in range(len(fan.maxcones)):
        if fan.cone_matrix(index).det() == 0:
            violations.append(f"cone {index} has linearly dependent rays")
    if violations:
        return violations
    for i, j in combinations(range(len(fan.maxcones)), 2):
        system = _separation_system(fan, fan.maxcones[i], fan.maxcones[j])
        if not is_feasible(system, fan.rank):
            violations.append(f"cones {i} and {j} do not meet in a common face")
    return violations


def is_smooth(fan: Fan) -> bool:
    return all(fan.cone_determinant(i) == 1 for i in range(len(fan.maxcones)))


def _walls(fan: Fan) -> dict[frozenset[int], list[int]]:
    walls: dict[frozenset[int], list[int]] = {}
    for index, cone in enumerate(fan.maxcones):
        for wall in combinations(cone, fan.rank - 1):
            walls.setdefault(frozenset(wall), []).append(index)
    return walls


def is_complete(fan: Fan) -> bool:
    """Every wall bounds exactly two maximal cones and the cones are wall-connected."""
    walls = _walls(fan)
    if any(len(cones) != 2 for cones in walls.values()):
        return False
    neighbours: dict[int, set[int]] = {i: set() for i in range(len(fan.maxcones))}
    for first, second in walls.values():
        neighbours[first].add(second)
        neighbours[second].add(first)
    reached = {0}
    queue = deque([0])
    while queue:
        for other in neighbours[queue.popleft()] - reached:
            reached.add(other)
            queue.append(other)
    return len(reached) == len(fan.maxcones)


def _ample_system(fan: Fan) -> tuple[list[Inequality], list[int]]:
    """
    Strict convexity constraints on a piecewise linear support function h.

    h vanishes on the rays of the first maximal cone; the remaining values
    are the unknowns. On cone sigma, h is linear and equals <m_sigma, .>.
    Across every wall to a neighbour with extra ray rho, <m_sigma, u_rho>
    must exceed h(u_rho) by at least 1.
    """
    fixed = set(fan.maxcones[0])
    unknowns = [rho for rho in range(fan.n_rays) if rho not in fixed]
    position = {rho: i for i, rho in enumerate(unknowns)}
    system: list[Inequality] = []
    walls = _walls(fan)
    for index, cone in enumerate(fan.maxcones):
        inverse = fan.cone_matrix(index).inv()
        for wall in combinations(cone, fan.rank - 1):
            neighbour = next(c for c in walls[frozenset(wall)] if c != index)
            (extra,) = set(fan.maxcones[neighbour]) - set(wall)
            ray = fan.rays[extra]
            coefficients = [Fraction(0)] * len(unknowns)
            for j, rho in enumerate(cone):
                weight = sum(to_fraction(inverse[i, j]) * ray[i] for i in range(fan.rank))
                if rho in position:
                    coefficients[position[rho]] += weight
            if extra in position:
                coefficients[position[extra]] -= 1
            system.append(Inequality(tuple(coefficients), Fraction(-1)))
    return system, unknowns


def ample_divisor(fan: Fan) -> tuple[int, ...] | None:
    """
    Coefficients of an ample torus-invariant divisor sum a_rho D_rho.

    Requires a complete simplicial fan. Returns None when no strictly convex
    support function exists, i.e. the fan is not projective.
    """
    system, unknowns = _ample_system(fan)
    point = feasible_point(system, len(unknowns))
    if point is None:
        return None
    values = dict(zip(unknowns, point))
    support = [values.get(rho, Fraction(0)) for rho in range(fan.n_rays)]
    scale = reduce(math.lcm, (h.denominator for h in support), 1)
    return tuple(int(-h * scale) for h in support)


def is_projective(fan: Fan) -> bool:
    return ample_divisor(fan) is not None


@dataclass
class FanDiagnostics:
    """Everything ``fan check`` reports about a fan."""

    violations: list[str] = field(default_factory=list)
    smooth: bool = False
    complete: bool = False
    projective: bool | None = None
    cone_determinants: list[int] = field(default_factory=list)
    ample_divisor: tuple[int, ...] | None = None

    @property
    def valid(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        if not self.valid:
            return "invalid"
        words = [
            "smooth" if self.smooth else "non-smooth",
            "complete" if self.complete else "incomplete",
        ]
        if self.projective is not None:
            words.append("projective" if self.projective else "non-projective")
        return " ".join(words)

    def to_document(self) -> dict[str, Any]:
        return {
            "valid": self.valid,
            "violations": self.violations,
            "smooth": self.smooth,
            "complete": self.complete,
            "projective": self.projective,
            "cone_determinants": self.cone_determinants,
            "ample_divisor": list(self.ample_divisor) if self.ample_divisor is not None else None,
        }


def diagnose(fan: Fan) -> FanDiagnostics:
    """Runs every predicate that the fan's validity allows."""
    violations = validate(fan)
    if violations:
        logger.warning("Fan is invalid: %s", "; ".join(violations))
        return FanDiagnostics(violations=violations)
    diagnostics = FanDiagnostics(
        smooth=is_smooth(fan),
        complete=is_complete(fan),
        cone_determinants=[fan.cone_determinant(i) for i in range(len(fan.maxcones))],
    )
    if diagnostics.complete:
        diagnostics.ample_divisor = ample_divisor(fan)
        diagnostics.projective = diagnostics.ample_divisor is not None
    logger.info("Fan diagnostics: %s", diagnostics.summary())
    return diagnostics
