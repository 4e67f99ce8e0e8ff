"""Jacobi and polar Jacobi polynomials with zero-location checks."""

from ._core import (
    BranchAmbiguity,
    CapacityExceeded,
    DegenerateParams,
    DegreeZero,
    Error,
    GammaPole,
    InvalidArgument,
    NoConvergence,
    PreconditionFailed,
    RegimeError,
    degeneracy_margin,
    find_roots,
    jacobi_eval,
    jacobi_poly,
    moments,
    operator_identity_residual,
    polar_poly,
    polar_recurrence_coeffs,
    polar_roots,
    squared_norm,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
