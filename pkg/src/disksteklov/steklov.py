"""Closed-form magnetic Steklov eigenvalues for the disk, inside and outside.

For Fourier mode n, half-field b (field strength 2b) and flux parameter
nu in (-1/2, 1/2], the boundary spectra are

    interior:  lambda_n(b)        = n - b + 2b M'(1/2, n+1, b)/M(1/2, n+1, b)
    exterior:  lambda_n(b, nu)    = nu - n + b - 2b U'(1/2, c, b)/U(1/2, c, b),
                                    c = n - nu + 1
    interior, pure flux (b = 0):  lambda_k(nu) = |k - nu|

with n < 0 and b < 0 reached through the symmetry
lambda_n(b, nu) = lambda_{-n}(-b, -nu); a single code path serves both signs.
The exterior evaluation runs through log-space U ratios, so mode indices and
fields of order 1e4 are handled without overflow.
"""

import math
from dataclasses import dataclass

from . import specfun
from .errors import InvalidParameterError, QuadratureError, WindowOverflowError


def _require_nu(nu: float) -> None:
    if not (-0.5 < nu <= 0.5):
        raise InvalidParameterError(f"flux parameter nu must lie in (-1/2, 1/2], got {nu}")


@dataclass(frozen=True)
class SpectralParams:
    """One point on an eigenvalue curve: mode n, half-field b, flux nu."""

    n: int
    b: float
    nu: float = 0.0

    def __post_init__(self):
        _require_nu(self.nu)


@dataclass(frozen=True)
class GroundState:
    """Minimizing Fourier mode and ground-state energy of the exterior map."""

    n_min: int
    value: float


@dataclass(frozen=True)
class CurveTable:
    """Sampled (b, lambda) data for a set of modes at fixed flux."""

    nu: float
    rows: tuple  # ((b, ((n, lambda), ...)), ...)

    def validate(self) -> None:
        bs = [row[0] for row in self.rows]
        if any(b2 <= b1 for b1, b2 in zip(bs, bs[1:])):
            raise InvalidParameterError("CurveTable rows must have strictly increasing b")
        for b, entries in self.rows:
            for n, lam in entries:
                if not math.isfinite(lam):
                    raise InvalidParameterError(f"non-finite eigenvalue at b={b}, n={n}")
                if b > 0.0 and lam <= 0.0:
                    raise InvalidParameterError(f"nonpositive eigenvalue at b={b}, n={n}")
                if b == 0.0 and lam < 0.0:
                    raise InvalidParameterError(f"negative limit value at b=0, n={n}")


def _canonical(n: int, b: float, nu: float):
    """Map (n, b, nu) with b < 0 onto the equivalent b > 0 triple."""
    if b < 0.0:
        n, b, nu = -n, -b, -nu
        if nu <= -0.5:  # flux -1/2 is gauge-equivalent to +1/2 with modes shifted by one
            n, nu = n + 1, nu + 1.0
    return n, b, nu


def exterior_eigenvalue(p: SpectralParams) -> float:
    """Exterior Steklov eigenvalue of mode p.n at half-field p.b, flux p.nu."""
    if p.b == 0.0:
        raise InvalidParameterError(
            "exterior closed form degenerates at b = 0; use the weak-field laws"
        )
    n, b, nu = _canonical(p.n, p.b, p.nu)
    c = n - nu + 1.0
    lam = nu - n + b - 2.0 * b * specfun.tricomi_u_log_deriv(c, b)
    if not (math.isfinite(lam) and lam > 0.0):
        raise QuadratureError(f"eigenvalue evaluation broke down at n={p.n}, b={p.b}, nu={p.nu}")
    return lam


def exterior_eigenvalue_u_form(p: SpectralParams) -> float:
    """Same eigenvalue through the direct-quadrature U values.

    lambda_n = nu - n + b + b U(3/2, c+1, b)/U(1/2, c, b); algebraically equal
    to :func:`exterior_eigenvalue` but assembled from unscaled FunValues, so it
    cross-checks the log-space path (at moderate parameters only).
    """
    if p.b == 0.0:
        raise InvalidParameterError("exterior closed form degenerates at b = 0")
    n, b, nu = _canonical(p.n, p.b, p.nu)
    c = n - nu + 1.0
    num = specfun.tricomi_u(1.5, c + 1.0, b)
    den = specfun.tricomi_u(0.5, c, b)
    return nu - n + b + b * num.value / den.value


def exterior_eigenvalue_dz(p: SpectralParams) -> float:
    """d/db of the exterior eigenvalue, in the factorized closed form.

    lambda_n'(z) = -2 U'(1/2,c,z) U(-1/2,c-1,z) / U(1/2,c,z)^2 with c = n-nu+1;
    the U(-1/2) factor is expanded through the contiguous relation so that the
    whole expression reduces to log-space ratios.
    """
    if p.b <= 0.0:
        raise InvalidParameterError(f"derivative requires b > 0, got b={p.b}")
    n, b, nu = p.n, p.b, p.nu
    c = n - nu + 1.0
    log_deriv = specfun.tricomi_u_log_deriv(c, b)
    down = specfun.tricomi_u_ratio(c - 1.0, c, b)
    # U(-1/2, c-1, z)/U(1/2, c, z) = z - (c - 3/2) U(1/2, c-1, z)/U(1/2, c, z)
    return -2.0 * log_deriv * (b - (c - 1.5) * down)


def interior_eigenvalue(n: int, b: float) -> float:
    """Interior Steklov eigenvalue; b = 0 gives |n| exactly."""
    if n < 0:
        n, b = -n, -b
    m = specfun.kummer_m(0.5, n + 1.0, b)
    m_dz = specfun.kummer_m_dz(0.5, n + 1.0, b)
    return n - b + 2.0 * b * m_dz.value / m.value


def interior_ab_eigenvalue(k: int, nu: float) -> float:
    """Interior Dirichlet-to-Neumann eigenvalue for pure flux: |k - nu|."""
    _require_nu(nu)
    return abs(k - nu)


def _rising(values: dict, start: int, step: int, count: int = 3) -> bool:
    """values nondecreasing for `count` consecutive modes in direction `step`."""
    for i in range(count):
        a = values[start + i * step]
        b = values[start + (i + 1) * step]
        if b < a - 1e-12 * (1.0 + abs(a)):
            return False
    return True


def ground_state(b: float, nu: float = 0.0) -> GroundState:
    """Ground-state energy inf_n lambda_n(b, nu) of the exterior map.

    Seeds the search at n0 = round(b + alpha sqrt(b) + nu) -- the mode picked
    out by the crossing-point asymptotics -- then grows the window until the
    minimum is interior and the curve rises for three consecutive modes on
    both sides.
    """
    if b <= 0.0:
        raise InvalidParameterError(f"ground state defined for b > 0, got b={b}")
    _require_nu(nu)
    n0 = round(b + specfun.alpha_root() * math.sqrt(b) + nu)
    half_width = 50.0 + b

    cache: dict[int, float] = {}

    def lam(n: int) -> float:
        if n not in cache:
            cache[n] = exterior_eigenvalue(SpectralParams(n=n, b=b, nu=nu))
        return cache[n]

    lo, hi = n0 - 4, n0 + 4
    while True:
        for n in range(lo, hi + 1):
            lam(n)
        n_min = min(range(lo, hi + 1), key=lambda n: cache[n])
        ok_left = n_min - 3 >= lo and _rising(cache, n_min, -1)
        ok_right = n_min + 3 <= hi and _rising(cache, n_min, +1)
        if ok_left and ok_right:
            return GroundState(n_min=n_min, value=cache[n_min])
        if not ok_left:
            lo -= 2
        if not ok_right:
            hi += 2
        if n0 - lo > half_width or hi - n0 > half_width:
            raise WindowOverflowError(
                f"no interior minimum within |n - {n0}| <= {half_width} at b={b}, nu={nu}"
            )


def dtn_gaps(b: float, nu: float, n_max: int) -> list[tuple[int, float]]:
    """Per-mode gaps |lambda_n(b, nu) - |n - nu|| for |n| <= n_max."""
    if b <= 0.0:
        raise InvalidParameterError(f"gap profile requires b > 0, got b={b}")
    _require_nu(nu)
    out = []
    for n in range(-n_max, n_max + 1):
        lam = exterior_eigenvalue(SpectralParams(n=n, b=b, nu=nu))
        out.append((n, abs(lam - abs(n - nu))))
    return out


def dtn_diff_norm(b: float, nu: float, n_max: int) -> float:
    """Operator-norm distance between the exterior map and its b = 0 limit.

    Both operators are diagonal in the Fourier basis, so the norm is the
    supremum of the per-mode gaps; it is approximated by the maximum over
    |n| <= n_max (the sup sits at small |n| for small b, and the tail decays
    like O(b) -- use :func:`dtn_gaps` to inspect it).
    """
    if n_max < 10:
        raise InvalidParameterError(f"n_max must be >= 10, got {n_max}")
    return max(gap for _, gap in dtn_gaps(b, nu, n_max))


def spectrum_window(b: float, nu: float, n_lo: int, n_hi: int):
    """One CurveTable row: ((n, lambda_n(b, nu)) for n in [n_lo, n_hi])."""
    if n_lo > n_hi:
        raise InvalidParameterError(f"empty mode window [{n_lo}, {n_hi}]")
    entries = tuple(
        (n, exterior_eigenvalue(SpectralParams(n=n, b=b, nu=nu)))
        for n in range(n_lo, n_hi + 1)
    )
    return b, entries


def sample_curves(nu: float, b_values, n_lo: int, n_hi: int) -> CurveTable:
    """CurveTable over a b grid.

    The exterior closed form degenerates at b = 0, but its b -> 0+ limit is
    the flux-only boundary map with eigenvalues |n - nu|, so a b = 0 grid
    point contributes that limit row; negative b values are skipped.
    """
    rows = []
    for b in b_values:
        if b == 0.0:
            entries = tuple((n, interior_ab_eigenvalue(n, nu))
                            for n in range(n_lo, n_hi + 1))
            rows.append((0.0, entries))
        elif b > 0.0:
            rows.append(spectrum_window(b, nu, n_lo, n_hi))
    table = CurveTable(nu=nu, rows=tuple(rows))
    table.validate()
    return table
