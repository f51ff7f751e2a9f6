"""Exact linear algebra over Z, Q and finite fields."""

from toric_mu_p.exactlin.finite_field import (
    FiniteField,
    fp_eigendecompose,
    fp_inverse,
    fp_kernel,
    fp_matrix_power_equals,
    fp_rank,
)
from toric_mu_p.exactlin.integer import (
    IntMatrix,
    SmithDecomposition,
    hermite_rows,
    int_matrix,
    invariant_factors,
    is_unimodular,
    smith_normal_form,
)
from toric_mu_p.exactlin.lattice import Lattice, dual_lattice, lattice_from_generators, to_fraction
from toric_mu_p.exactlin.polyhedra import (
    Inequality,
    UnboundedRegion,
    eliminate,
    feasible_point,
    is_feasible,
    lattice_points,
)

__all__ = [
    "FiniteField",
    "Inequality",
    "IntMatrix",
    "Lattice",
    "SmithDecomposition",
    "UnboundedRegion",
    "dual_lattice",
    "eliminate",
    "feasible_point",
    "fp_eigendecompose",
    "fp_inverse",
    "fp_kernel",
    "fp_matrix_power_equals",
    "fp_rank",
    "hermite_rows",
    "int_matrix",
    "invariant_factors",
    "is_feasible",
    "is_unimodular",
    "lattice_from_generators",
    "lattice_points",
    "smith_normal_form",
    "to_fraction",
]
