"""Isogeometric collocation for second-order elliptic problems.

B-spline/NURBS spaces of maximal smoothness, four collocation-point
selections built on superconvergent points (Greville, least-squares,
alternating, clustered), a Galerkin reference solver, and convergence-study
helpers. The compiled core does the work; this package re-exports it.
"""

from ._core import (
    ConfigError,
    InvalidArgument,
    NumericalError,
    basis_values,
    collocation_points,
    convergence_study,
    greville_points,
    open_uniform_knots,
    problems,
    residual_samples,
    solve_errors,
    superconvergent_points,
)

__all__ = [
    "ConfigError",
    "InvalidArgument",
    "NumericalError",
    "basis_values",
    "collocation_points",
    "convergence_study",
    "greville_points",
    "open_uniform_knots",
    "problems",
    "residual_samples",
    "solve_errors",
    "superconvergent_points",
]
