"""Magnetic Steklov (Dirichlet-to-Neumann) eigenvalues of the unit disk.

Computes the boundary spectra of the magnetic Schroedinger operator with a
constant field of strength 2b plus an Aharonov-Bohm flux 2*pi*nu, for both
the interior and the exterior problem, together with the crossing points of
adjacent eigenvalue curves, the weak- and strong-field asymptotic laws, and a
special-function-free Riccati-shooting oracle.
"""

from .asympt import (
    AsymptoticModel,
    fit_gap_exponent,
    model_crossing,
    model_groundstate_strongfield,
    model_weakfield,
    weakfield_flux_coefficient,
)
from .errors import (
    BracketError,
    DiskSteklovError,
    InvalidParameterError,
    NonConvergenceError,
    PoleArgumentError,
    QuadratureError,
    ShootingError,
    UnsupportedParameterError,
    WindowOverflowError,
)
from .intersect import (
    CrossingPoint,
    ModeMinimum,
    MonotonicityReport,
    crossing,
    crossing_monotonicity,
    minimum_of_mode,
)
from .oracle import ShootConfig, exterior_shoot, interior_shoot
from .specfun import (
    FunValue,
    Quadrature,
    SpecParams,
    alpha_root,
    gamma,
    kummer_m,
    kummer_m_dz,
    parabolic_d,
    tricomi_u,
    tricomi_u_dz,
    tricomi_u_log,
    tricomi_u_log_deriv,
    tricomi_u_small_z,
)
from .steklov import (
    CurveTable,
    GroundState,
    SpectralParams,
    dtn_diff_norm,
    dtn_gaps,
    exterior_eigenvalue,
    exterior_eigenvalue_dz,
    exterior_eigenvalue_u_form,
    ground_state,
    interior_ab_eigenvalue,
    interior_eigenvalue,
    sample_curves,
    spectrum_window,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticModel",
    "BracketError",
    "CrossingPoint",
    "CurveTable",
    "DiskSteklovError",
    "FunValue",
    "GroundState",
    "InvalidParameterError",
    "ModeMinimum",
    "MonotonicityReport",
    "NonConvergenceError",
    "PoleArgumentError",
    "Quadrature",
    "QuadratureError",
    "ShootConfig",
    "ShootingError",
    "SpecParams",
    "SpectralParams",
    "UnsupportedParameterError",
    "WindowOverflowError",
    "alpha_root",
    "crossing",
    "crossing_monotonicity",
    "dtn_diff_norm",
    "dtn_gaps",
    "exterior_eigenvalue",
    "exterior_eigenvalue_dz",
    "exterior_eigenvalue_u_form",
    "exterior_shoot",
    "fit_gap_exponent",
    "gamma",
    "ground_state",
    "interior_ab_eigenvalue",
    "interior_eigenvalue",
    "interior_shoot",
    "kummer_m",
    "kummer_m_dz",
    "minimum_of_mode",
    "model_crossing",
    "model_groundstate_strongfield",
    "model_weakfield",
    "parabolic_d",
    "sample_curves",
    "spectrum_window",
    "tricomi_u",
    "tricomi_u_dz",
    "tricomi_u_log",
    "tricomi_u_log_deriv",
    "tricomi_u_small_z",
    "weakfield_flux_coefficient",
]
