"""Special-function kernel: Gamma, Kummer M, Tricomi U, parabolic cylinder D.

All public evaluations return a :class:`FunValue` carrying the computed value
together with an a-posteriori absolute-error estimate, so downstream layers
can propagate uncertainty instead of guessing.

Evaluation strategy
-------------------
* ``M(a, c, z)``   -- direct summation of the entire series
  ``sum_k (a)_k/(c)_k z^k/k!`` with a geometric tail bound.
* ``U(a, c, z)``   -- for a > 0, adaptive quadrature of the Laplace integral
  ``U = 1/Gamma(a) * int_0^inf e^{-zt} t^{a-1} (1+t)^{c-a-1} dt``.
  The substitution t = x^2 removes the endpoint singularity of the t^{a-1}
  factor for a >= 1/2, and the integrand is rescaled by the maximum of
  ``exp(p*log1p(t) - z*t)`` so that huge parameters (c up to ~1e4) never
  overflow.  ``tricomi_u_log`` exposes the overflow-safe log-space value.
* ``U(-1/2, c, z)`` -- the only nonpositive a needed (eigenvalue-curve
  crossings); routed through the positive-a values via the contiguous
  relation ``U(-1/2,c,z) = z*U(1/2,c+1,z) - (c-1/2)*U(1/2,c,z)``.
* ``D_mu(z)``      -- for mu < 0, quadrature of
  ``e^{-z^2/4}/Gamma(-mu) * int_0^inf t^{-mu-1} e^{-(t^2/2+zt)} dt``;
  for mu in (0, 1], one step of the three-term recurrence
  ``D_mu = z*D_{mu-1} - (mu-1)*D_{mu-2}``.

All functions are pure; the only cached state is the scalar ``alpha_root``
result, which is immutable once computed.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

from scipy.integrate import quad
from scipy.optimize import brentq
from scipy.special import digamma

from .errors import (
    BracketError,
    InvalidParameterError,
    NonConvergenceError,
    PoleArgumentError,
    QuadratureError,
    UnsupportedParameterError,
)

EULER_GAMMA = 0.5772156649015328606

_LOG_FLOAT_MAX = math.log(math.sqrt(1.7976931348623157e308))  # headroom for squares


@dataclass(frozen=True)
class FunValue:
    """A special-function value with an a-posteriori absolute error bound."""

    value: float
    abs_err: float

    def __post_init__(self):
        if not (math.isfinite(self.abs_err) and self.abs_err >= 0.0):
            raise InvalidParameterError(
                f"abs_err must be finite and nonnegative, got {self.abs_err}"
            )

    def __float__(self) -> float:
        return self.value


@dataclass(frozen=True)
class SpecParams:
    """Parameter triple (a, c, z) of a confluent hypergeometric evaluation."""

    a: float
    c: float
    z: float

    def require_m_series(self) -> None:
        # the M series has poles of (c)_k at c = 0, -1, -2, ...
        if self.c <= 0.0 and float(self.c).is_integer():
            raise InvalidParameterError(
                f"M(a,c,z) is undefined for nonpositive integer c, got c={self.c}"
            )


@dataclass(frozen=True)
class Quadrature:
    """Adaptive-quadrature policy for the semi-infinite integral representations."""

    rel_tol: float = 1e-12
    max_subdivisions: int = 2000

    def __post_init__(self):
        if not (0.0 < self.rel_tol <= 1e-6):
            raise InvalidParameterError(f"rel_tol must lie in (0, 1e-6], got {self.rel_tol}")
        if self.max_subdivisions < 1:
            raise InvalidParameterError("max_subdivisions must be >= 1")


_DEFAULT_QUAD = Quadrature()


def _quad_panel(f, lo, hi, rule: Quadrature):
    """One adaptive-quadrature panel: (value, error estimate, warning or None)."""
    out = quad(f, lo, hi, epsabs=1e-300, epsrel=rule.rel_tol,
               limit=rule.max_subdivisions, full_output=1)
    warning = out[3].splitlines()[0] if len(out) == 4 else None
    return out[0], out[1], warning


def _log_u_integral(a: float, p: float, z: float, rule: Quadrature):
    """log of I = int_0^inf t^(a-1) (1+t)^p e^(-zt) dt, with relative error.

    Uses t = x^2 and rescales by the maximum of h(t) = p*log1p(t) - z*t so the
    integrand stays O(1).  Panels are split at the peak, at the decay scale
    t ~ t_peak + 1/z, and on a geometric ladder in between, because for very
    small z the mass spreads over many decades.
    """
    if p > z:
        t_peak = p / z - 1.0
        h_peak = p * math.log1p(t_peak) - z * t_peak
    else:
        t_peak = 0.0
        h_peak = 0.0
    two_a1 = 2.0 * a - 1.0

    def g(x):
        t = x * x
        return x ** two_a1 * math.exp(p * math.log1p(t) - z * t - h_peak)

    x_hi = math.sqrt(t_peak + 1.0 / z)
    x_cut = math.sqrt(t_peak + 60.0 / z)  # exp(h - h_peak) < 1e-26 past here
    points = {1.0, x_hi, x_cut}
    if t_peak > 0.0:
        points.add(math.sqrt(t_peak))
    # geometric ladder when the integrand support spans many decades
    x = 10.0
    while x < x_cut:
        points.add(x)
        x *= 10.0
    cuts = sorted(points)

    # Panels may carry QUADPACK roundoff warnings (the estimates stay honest);
    # acceptance is decided by the aggregate relative error below.
    total, err = 0.0, 0.0
    worst_warning = None
    lo = 0.0
    for hi in cuts + [math.inf]:
        v, e, warning = _quad_panel(g, lo, hi, rule)
        if not math.isfinite(v):
            raise QuadratureError(f"non-finite panel on [{lo}, {hi}] for a={a}, p={p}, z={z}")
        if warning is not None:
            worst_warning = warning
        total += v
        err += abs(e)
        lo = hi
    if not (total > 0.0) or not math.isfinite(total):
        raise QuadratureError(f"integral representation degenerate for a={a}, p={p}, z={z}")
    rel_err = err / total
    if rel_err > 1e4 * rule.rel_tol:
        raise QuadratureError(
            f"quadrature error {rel_err:.2e} above tolerance for a={a}, p={p}, z={z}"
            + (f" ({worst_warning})" if worst_warning else "")
        )
    return h_peak + math.log(2.0 * total), rel_err


def gamma(x: float) -> FunValue:
    """Gamma function with pole detection at nonpositive integers."""
    if x <= 0.0 and float(x).is_integer():
        raise PoleArgumentError(f"Gamma has a pole at {x}")
    value = math.gamma(x)
    return FunValue(value=value, abs_err=abs(value) * 5e-15)


def kummer_m(a: float, c: float, z: float, *, rel_tol: float = 1e-16,
             max_terms: int = 10_000) -> FunValue:
    """Kummer confluent hypergeometric M(a, c, z) by direct series summation.

    Terminates once three consecutive terms fall below rel_tol times the
    partial sum and a geometric tail bound is valid.  The error estimate
    combines that tail bound with the roundoff floor set by the largest
    intermediate term (relevant for z < 0, where the series alternates).
    """
    SpecParams(a, c, z).require_m_series()
    term = 1.0
    total = 1.0
    largest = 1.0
    quiet = 0
    k = 0
    while k < max_terms:
        term *= (a + k) / (c + k) * z / (k + 1)
        total += term
        largest = max(largest, abs(term))
        k += 1
        if abs(term) <= rel_tol * abs(total):
            quiet += 1
            if quiet >= 3:
                break
        else:
            quiet = 0
    else:
        raise NonConvergenceError(
            f"M series did not converge within {max_terms} terms for a={a}, c={c}, z={z}"
        )
    # geometric tail: term ratios are ~ z/k once k >> |z|, |a|, |c|
    ratio = abs(z) * abs(a + k) / (abs(c + k) * (k + 1))
    tail = abs(term) * ratio / (1.0 - ratio) if ratio < 0.5 else abs(term)
    roundoff = 2.2e-16 * largest * max(1.0, math.sqrt(k))
    return FunValue(value=total, abs_err=tail + roundoff)


def kummer_m_dz(a: float, c: float, z: float) -> FunValue:
    """d/dz M(a, c, z) via the shift identity M'(a,c,z) = (a/c) M(a+1, c+1, z)."""
    SpecParams(a, c, z).require_m_series()
    inner = kummer_m(a + 1.0, c + 1.0, z)
    scale = a / c
    return FunValue(value=scale * inner.value, abs_err=abs(scale) * inner.abs_err)


def tricomi_u_log(a: float, c: float, z: float,
                  rule: Quadrature = _DEFAULT_QUAD) -> float:
    """log U(a, c, z) for a > 0, z > 0; safe for parameters whose U overflows.

    All eigenvalue and crossing computations consume differences of these
    log values, so only ratios of U ever need to fit in binary64.
    """
    if a <= 0.0:
        raise UnsupportedParameterError(f"log evaluation requires a > 0, got a={a}")
    if z <= 0.0:
        raise InvalidParameterError(f"U(a,c,z) requires z > 0, got z={z}")
    log_integral, _ = _log_u_integral(a, c - a - 1.0, z, rule)
    return log_integral - math.lgamma(a)


def tricomi_u(a: float, c: float, z: float,
              rule: Quadrature = _DEFAULT_QUAD) -> FunValue:
    """Tricomi confluent hypergeometric U(a, c, z) for z > 0.

    Routing: a > 0 goes through the Laplace integral (positive integrand, so
    the result is certified positive); a = -1/2 goes through the contiguous
    relation on the positive-a values.  Other nonpositive a are rejected.
    """
    if z <= 0.0:
        raise InvalidParameterError(f"U(a,c,z) requires z > 0, got z={z}")
    if a == -0.5:
        up = tricomi_u(0.5, c + 1.0, z, rule)
        same = tricomi_u(0.5, c, z, rule)
        value = z * up.value - (c - 0.5) * same.value
        abs_err = (z * up.abs_err + abs(c - 0.5) * same.abs_err
                   + 2.2e-16 * max(z * up.value, abs(c - 0.5) * same.value))
        return FunValue(value=value, abs_err=abs_err)
    if a <= 0.0:
        raise UnsupportedParameterError(
            f"U(a,c,z) supports a > 0 or a = -1/2, got a={a}"
        )
    log_integral, rel_err = _log_u_integral(a, c - a - 1.0, z, rule)
    log_value = log_integral - math.lgamma(a)
    if log_value > _LOG_FLOAT_MAX:
        raise QuadratureError(
            f"U({a},{c},{z}) overflows binary64; use tricomi_u_log instead"
        )
    value = math.exp(log_value)
    return FunValue(value=value, abs_err=value * (rel_err + 2.2e-16))


def tricomi_u_dz(a: float, c: float, z: float,
                 rule: Quadrature = _DEFAULT_QUAD) -> FunValue:
    """d/dz U(a, c, z) via the shift identity U'(a,c,z) = -a U(a+1, c+1, z)."""
    inner = tricomi_u(a + 1.0, c + 1.0, z, rule)
    return FunValue(value=-a * inner.value, abs_err=abs(a) * inner.abs_err)


def tricomi_u_log_deriv(c: float, z: float,
                        rule: Quadrature = _DEFAULT_QUAD) -> float:
    """U'(1/2, c, z) / U(1/2, c, z), computed entirely in log space.

    The two Laplace integrands share the factor (1+t)^(c-3/2) e^(-zt), so a
    common rescaling cancels exactly and the ratio stays finite for mode
    indices far beyond the direct-evaluation overflow point (tested to
    c ~ 1e4).  Equals -1/2 * U(3/2, c+1, z)/U(1/2, c, z).
    """
    p = c - 1.5
    log_up, _ = _log_u_integral(1.5, p, z, rule)
    log_dn, _ = _log_u_integral(0.5, p, z, rule)
    # Gamma(1/2)/Gamma(3/2) = 2
    return -math.exp(log_up - log_dn)


def tricomi_u_ratio(c_num: float, c_den: float, z: float, a: float = 0.5,
                    rule: Quadrature = _DEFAULT_QUAD) -> float:
    """U(a, c_num, z) / U(a, c_den, z) in log space (same a in both)."""
    log_num, _ = _log_u_integral(a, c_num - a - 1.0, z, rule)
    log_den, _ = _log_u_integral(a, c_den - a - 1.0, z, rule)
    return math.exp(log_num - log_den)


def tricomi_u_small_z(a: float, c: float, z: float) -> float:
    """Leading-order behavior of U(a, c, z) as z -> 0+.

    Integer c:
        U(a, 1, z) = -(log z + psi(a) + 2*gamma_E)/Gamma(a)
        U(a, 2, z) = 1/(Gamma(a) z)
        U(a, m, z) = Gamma(m-1)/Gamma(a) z^(1-m),          m >= 3
    Non-integer c:
        U(a, c, z) = Gamma(1-c)/Gamma(a+1-c),              c < 1
        U(a, c, z) = Gamma(c-1)/Gamma(a) z^(1-c),          c > 1

    Used as an independent cross-check of the quadrature path; the quadrature
    itself stays authoritative at all z > 0.
    """
    if float(c).is_integer():
        m = int(round(c))
        if m == 1:
            return -(math.log(z) + digamma(a) + 2.0 * EULER_GAMMA) / math.gamma(a)
        if m >= 2:
            return math.gamma(m - 1) / math.gamma(a) * z ** (1 - m)
        raise UnsupportedParameterError(f"no small-z law tabulated for integer c={c}")
    if c < 1.0:
        return math.gamma(1.0 - c) / math.gamma(a + 1.0 - c)
    return math.gamma(c - 1.0) / math.gamma(a) * z ** (1.0 - c)


def parabolic_d(mu: float, z: float,
                rule: Quadrature = _DEFAULT_QUAD) -> FunValue:
    """Parabolic cylinder function D_mu(z) for mu < 0, plus mu in [0, 1].

    mu < 0 uses the integral representation (strictly positive integrand, so
    D_mu(z) > 0 with a certified bound).  mu in (0, 1] takes one step of
    D_{mu+1} = z D_mu - mu D_{mu-1} rewritten at mu-1, landing on negative
    orders; D_0(z) = e^{-z^2/4} is exact.  Larger mu is unsupported.
    """
    if mu > 1.0:
        raise UnsupportedParameterError(f"parabolic_d supports mu <= 1, got mu={mu}")
    if mu == 0.0:
        value = math.exp(-0.25 * z * z)
        return FunValue(value=value, abs_err=value * 4.4e-16)
    if mu > 0.0:
        lower = parabolic_d(mu - 1.0, z, rule)
        lowest = parabolic_d(mu - 2.0, z, rule)
        value = z * lower.value - (mu - 1.0) * lowest.value
        abs_err = (abs(z) * lower.abs_err + abs(mu - 1.0) * lowest.abs_err
                   + 2.2e-16 * (abs(z * lower.value) + abs((mu - 1.0) * lowest.value)))
        return FunValue(value=value, abs_err=abs_err)

    # mu < 0: t = x^2 again removes the t^{-mu-1} endpoint behavior
    power = -2.0 * mu - 1.0

    def g(x):
        t = x * x
        return x ** power * math.exp(-(0.5 * t * t + z * t))

    v1, e1, w1 = _quad_panel(g, 0.0, 1.0 + abs(z), rule)
    v2, e2, w2 = _quad_panel(g, 1.0 + abs(z), math.inf, rule)
    if not (math.isfinite(v1) and math.isfinite(v2)) or v1 + v2 <= 0.0:
        raise QuadratureError(f"parabolic-cylinder integral failed for mu={mu}, z={z}")
    if abs(e1) + abs(e2) > 1e4 * rule.rel_tol * (v1 + v2):
        raise QuadratureError(
            f"parabolic-cylinder quadrature above tolerance for mu={mu}, z={z}"
            + (f" ({w1 or w2})" if (w1 or w2) else "")
        )
    prefactor = math.exp(-0.25 * z * z - math.lgamma(-mu))
    value = 2.0 * (v1 + v2) * prefactor
    abs_err = 2.0 * (abs(e1) + abs(e2)) * prefactor + value * 4.4e-16
    return FunValue(value=value, abs_err=abs_err)


@lru_cache(maxsize=1)
def alpha_root() -> float:
    """The positive constant alpha defined by D_{1/2}(-alpha) = 0.

    Computed as the root of f(beta) = beta - D_{-3/2}(-beta)/(2 D_{-1/2}(-beta)),
    which is equivalent through the three-term recurrence and only needs the
    certified-positive negative-order values.  Bracketed on [0.5, 1.0].
    """
    def f(beta: float) -> float:
        num = parabolic_d(-1.5, -beta).value
        den = parabolic_d(-0.5, -beta).value
        return beta - 0.5 * num / den

    lo, hi = 0.5, 1.0
    if f(lo) * f(hi) >= 0.0:
        raise BracketError("alpha bracket [0.5, 1.0] lost its sign change")
    return float(brentq(f, lo, hi, xtol=1e-13, rtol=1e-14))
