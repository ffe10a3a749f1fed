"""Crossing points of adjacent exterior eigenvalue curves.

The curves lambda_n(., nu) and lambda_{n+1}(., nu) intersect at a unique
positive field z_n(nu), characterized by U(-1/2, n - nu + 1, z_n) = 0.  At a
crossing the eigenvalue takes the closed value lambda_n(z_n) = n - nu + 1 - z_n,
and positivity of the boundary map forces z_n < n - nu + 1.  z_{n-1} is the
unique minimum of lambda_n, with curvature (n - nu - z_{n-1})/z_{n-1} there.

Root finding works on the positively-rescaled residual

    r(z) = z U(1/2, c+1, z)/U(1/2, c, z) - (c - 1/2),      c = n - nu + 1,

which shares its sign and root with U(-1/2, c, z) (the contiguous relation
divided by U(1/2, c, z) > 0) but stays O(c) instead of underflowing.
"""

import math
from dataclasses import dataclass, field

from scipy.optimize import brentq

from . import specfun
from .errors import BracketError, InvalidParameterError
from .steklov import SpectralParams, exterior_eigenvalue, ground_state

DEFINING_TOL = 1e-9
G_FORMULA_TOL = 1e-8


@dataclass(frozen=True)
class CrossingPoint:
    """Intersection of curves (n, n+1) at flux nu, with its certifying residuals."""

    n: int
    nu: float
    z: float
    lambda_at_z: float
    curve_residual: float      # |lambda_n(z) - lambda_{n+1}(z)|
    g_residual: float          # |lambda_n(z) - (n - nu + 1 - z)|
    defining_residual: float   # |U(-1/2, n-nu+1, z)|, scaled by the identity terms

    def __post_init__(self):
        c = self.n - self.nu + 1.0
        if not self.z < c:
            raise InvalidParameterError(f"crossing z={self.z} violates z < {c}")
        if self.defining_residual > DEFINING_TOL:
            raise InvalidParameterError(
                f"defining residual {self.defining_residual:.3e} above {DEFINING_TOL:g}"
            )
        if self.g_residual > G_FORMULA_TOL:
            raise InvalidParameterError(
                f"closed-value residual {self.g_residual:.3e} above {G_FORMULA_TOL:g}"
            )


@dataclass(frozen=True)
class ModeMinimum:
    """Location, value, and curvature of the unique minimum of lambda_n."""

    z_star: float
    lambda_min: float
    second_deriv: float


@dataclass
class MonotonicityReport:
    """Outcome of the ordering / interval-monotonicity / envelope checks."""

    nu: float
    n_max: int
    crossings: list = field(default_factory=list)
    violations: list = field(default_factory=list)  # (kind, n, z) triples

    @property
    def ok(self) -> bool:
        return not self.violations


def _scaled_zero_fun(c: float, z: float) -> float:
    return z * specfun.tricomi_u_ratio(c + 1.0, c, z) - (c - 0.5)


def crossing(n: int, nu: float = 0.0) -> CrossingPoint:
    """Locate the intersection z_n(nu) of curves n and n+1.

    The root is bracketed on (eps, c) -- the residual runs to -inf as z -> 0+
    and is positive at z = c -- and refined by Brent's method to |dz| <= 1e-10.
    If no sign change is found (which happens only in the degenerate corner
    c = n - nu + 1 <= 1/2, where the curves meet at b = 0 instead), a
    BracketError reports it rather than inventing a root.
    """
    if n < 0:
        raise InvalidParameterError(f"crossing index must be >= 0, got n={n}")
    c = n - nu + 1.0
    if c <= 0.0:
        raise InvalidParameterError(f"need n - nu + 1 > 0, got {c}")

    hi = c
    f_hi = _scaled_zero_fun(c, hi)
    eps = 1e-6
    f_lo = _scaled_zero_fun(c, eps)
    try:
        while f_lo * f_hi > 0.0 and eps > 1e-18:
            eps *= 0.1
            f_lo = _scaled_zero_fun(c, eps)
    except QuadratureError:
        eps = 0.0  # the left end already chased the z -> 0 limit
    if eps == 0.0 or f_lo * f_hi > 0.0:
        raise BracketError(
            f"no sign change of U(-1/2, {c}, z) on (0, {c:g}); "
            f"no positive crossing exists for n={n}, nu={nu}"
        )
    z = float(brentq(lambda x: _scaled_zero_fun(c, x), eps, hi, xtol=1e-12, rtol=1e-14))

    lam_n = exterior_eigenvalue(SpectralParams(n=n, b=z, nu=nu))
    lam_n1 = exterior_eigenvalue(SpectralParams(n=n + 1, b=z, nu=nu))
    scale = max(1.0, c - 0.5)
    return CrossingPoint(
        n=n,
        nu=nu,
        z=z,
        lambda_at_z=lam_n,
        curve_residual=abs(lam_n - lam_n1),
        g_residual=abs(lam_n - (c - z)),
        defining_residual=abs(_scaled_zero_fun(c, z)) / scale,
    )


def minimum_of_mode(n: int, nu: float = 0.0) -> ModeMinimum:
    """Minimum of lambda_n: at z_{n-1}(nu), with curvature (n - nu - z)/z."""
    if n < 1:
        raise InvalidParameterError(f"mode minimum defined for n >= 1, got n={n}")
    z_star = crossing(n - 1, nu).z
    lam_min = exterior_eigenvalue(SpectralParams(n=n, b=z_star, nu=nu))
    second_deriv = (n - nu - z_star) / z_star
    return ModeMinimum(z_star=z_star, lambda_min=lam_min, second_deriv=second_deriv)


def crossing_monotonicity(n_max: int, nu: float = 0.0, grid_points: int = 100,
                          ground_state_stride: int = 10) -> MonotonicityReport:
    """Certify ordering of crossings and monotone growth between them.

    Checks, collecting violations instead of raising:
      * z_0 < z_1 < ... < z_{n_max};
      * lambda_n increasing on a grid of [z_{n-1}, z_n] (grid_points samples);
      * the ground state equals mode n on that interval (sampled every
        ground_state_stride-th grid point).
    """
    if n_max < 2:
        raise InvalidParameterError(f"n_max must be >= 2, got {n_max}")
    report = MonotonicityReport(nu=nu, n_max=n_max)
    report.crossings = [crossing(n, nu) for n in range(n_max + 1)]

    zs = [cp.z for cp in report.crossings]
    for n in range(1, n_max + 1):
        if not zs[n - 1] < zs[n]:
            report.violations.append(("ordering", n, zs[n]))

    for n in range(1, n_max + 1):
        z_lo, z_hi = zs[n - 1], zs[n]
        step = (z_hi - z_lo) / (grid_points - 1)
        previous = None
        for i in range(grid_points):
            z = z_lo + i * step
            lam = exterior_eigenvalue(SpectralParams(n=n, b=z, nu=nu))
            if previous is not None and lam < previous - 1e-12 * (1.0 + abs(previous)):
                report.violations.append(("monotonicity", n, z))
            previous = lam
            interior = 0 < i < grid_points - 1
            if interior and i % ground_state_stride == 0:
                gs = ground_state(z, nu)
                if gs.n_min != n or abs(gs.value - lam) > 1e-10 * (1.0 + abs(lam)):
                    report.violations.append(("ground_state", n, z))
    return report
