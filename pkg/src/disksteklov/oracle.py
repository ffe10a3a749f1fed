"""Special-function-free oracle: Riccati shooting for the radial problem.

The radial factor of a boundary-data solution satisfies

    -v'' - v'/r + (b r - m/r)^2 v = 0,        m = n - nu,

on (1, inf) for the exterior problem and (0, 1) for the interior one.  The
logarithmic derivative w = v'/v obeys the Riccati equation

    w' = -w^2 - w/r + (b r - m/r)^2,

which avoids the e^{+-br^2/2} overflow of linear shooting.  Integrating w
inward from the exponentially-decaying branch's leading behavior
w(r) ~ -b r + (m-1)/r reproduces the exterior eigenvalue as -w(1); starting
outward from the regular branch w(r) ~ |m|/r reproduces the interior one as
w(1).  The decaying branch is strongly attracting inward, so one asymptotic
seed term suffices; a pole of w en route signals a wrong branch and triggers
a restart from a larger radius.
"""

import math
from dataclasses import dataclass

from scipy.integrate import solve_ivp

from .errors import InvalidParameterError, ShootingError
from .steklov import SpectralParams

INWARD = "inward-from-infinity"
OUTWARD = "outward-from-zero"


@dataclass(frozen=True)
class ShootConfig:
    """Integration policy for one shooting run."""

    r_max: float | None = None      # outer start radius; None = automatic
    r_min: float = 1e-4             # inner start radius (interior problem)
    abs_tol: float = 1e-11
    rel_tol: float = 1e-11
    direction: str = INWARD

    def __post_init__(self):
        if self.r_max is not None and not self.r_max > 1.0:
            raise InvalidParameterError(f"r_max must exceed 1, got {self.r_max}")
        if not 0.0 < self.r_min < 1.0:
            raise InvalidParameterError(f"r_min must lie in (0, 1), got {self.r_min}")
        for tol in (self.abs_tol, self.rel_tol):
            if not 0.0 < tol <= 1e-6:
                raise InvalidParameterError(f"tolerances must lie in (0, 1e-6], got {tol}")
        if self.direction not in (INWARD, OUTWARD):
            raise InvalidParameterError(f"unknown direction {self.direction!r}")


def _default_r_max(m: float, b: float) -> float:
    # past the turning point r ~ sqrt(|m|/b), with margin for the seed to settle
    return max(8.0, math.sqrt((abs(m) + 25.0) / b) + 4.0)


def _integrate(m: float, b: float, r_from: float, r_to: float, w0: float,
               cfg: ShootConfig) -> float:
    def rhs(r, w):
        q = b * r - m / r
        return [-(w[0] * w[0]) - w[0] / r + q * q]

    pole_cap = 100.0 * (abs(w0) + b * max(r_from, r_to) + abs(m) + 10.0)

    def blow_up(r, w):
        return abs(w[0]) - pole_cap
    blow_up.terminal = True

    sol = solve_ivp(rhs, (r_from, r_to), [w0], method="DOP853",
                    rtol=cfg.rel_tol, atol=cfg.abs_tol, events=blow_up)
    if sol.status == 1:
        raise ShootingError(
            f"w blew up at r={sol.t_events[0][0]:.4g}: wrong branch, enlarge r_max"
        )
    if not sol.success:
        raise ShootingError(f"integrator failed: {sol.message}")
    return float(sol.y[0, -1])


def exterior_shoot(p: SpectralParams, cfg: ShootConfig | None = None) -> float:
    """Exterior eigenvalue -w(1) by inward integration from the decaying branch."""
    if p.b <= 0.0:
        raise InvalidParameterError(f"exterior shooting requires b > 0, got b={p.b}")
    cfg = cfg or ShootConfig()
    if cfg.direction != INWARD:
        raise InvalidParameterError("exterior shooting integrates inward from infinity")
    m = p.n - p.nu
    r_max = cfg.r_max if cfg.r_max is not None else _default_r_max(m, p.b)
    for attempt in range(4):
        w0 = -p.b * r_max + (m - 1.0) / r_max
        try:
            return -_integrate(m, p.b, r_max, 1.0, w0, cfg)
        except ShootingError:
            if attempt == 3:
                raise
            r_max *= 1.5
    raise AssertionError("unreachable")


def interior_shoot(n: int, b: float, nu: float = 0.0,
                   cfg: ShootConfig | None = None) -> float:
    """Interior eigenvalue w(1) by outward integration from the regular branch."""
    cfg = cfg or ShootConfig(direction=OUTWARD)
    if cfg.direction != OUTWARD:
        raise InvalidParameterError("interior shooting integrates outward from zero")
    if not -0.5 < nu <= 0.5:
        raise InvalidParameterError(f"flux parameter nu must lie in (-1/2, 1/2], got {nu}")
    m = n - nu
    w0 = abs(m) / cfg.r_min
    return _integrate(m, b, cfg.r_min, 1.0, w0, cfg)
