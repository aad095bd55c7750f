"""Symplectic eigenvalues, Williamson decompositions and symplectic Schur-Horn constructions."""

from ._core import (
    ConstraintError,
    DefinitenessError,
    DimensionError,
    DomainError,
    MajorisationVerdict,
    NumericalError,
    check_forward,
    construct_arithmetic,
    construct_geometric,
    delta_c,
    delta_s,
    ds_of_symplectic_diagonal,
    horn_construct,
    is_majorized,
    is_weakly_submajorized,
    is_weakly_supermajorized,
    sample_orbit,
    symplectic_eigenvalues,
    waterfill_intermediate,
    williamson_decomposition,
)

__all__ = [
    "ConstraintError",
    "DefinitenessError",
    "DimensionError",
    "DomainError",
    "MajorisationVerdict",
    "NumericalError",
    "check_forward",
    "construct_arithmetic",
    "construct_geometric",
    "delta_c",
    "delta_s",
    "ds_of_symplectic_diagonal",
    "horn_construct",
    "is_majorized",
    "is_weakly_submajorized",
    "is_weakly_supermajorized",
    "sample_orbit",
    "symplectic_eigenvalues",
    "waterfill_intermediate",
    "williamson_decomposition",
]
