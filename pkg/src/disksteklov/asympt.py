"""Named asymptotic laws with residual evaluators.

Each model packages the coefficients of one expansion together with a
dimensionless residual evaluator: the evaluator subtracts the truncated law
from the computed quantity and rescales by the claimed remainder order, so a
correct implementation yields residuals bounded by an O(1) constant on the
law's regime.  The models cover

  * ground state, strong field:  alpha sqrt(b) + (alpha^2 + 2)/6 + O(b^-1/2);
  * crossing points, large n:    (n-nu) - alpha sqrt(n-nu) + (alpha^2+2)/3;
  * weak field, per mode:        the log law at n = 0, the b log b law at
    |n| = 1, the linear -n/(|n|-1) b law at |n| >= 2, and the fractional
    b^|nu| / b^(1-|nu|) flux laws.
"""

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import InvalidParameterError
from .intersect import crossing
from .specfun import alpha_root, gamma
from .steklov import SpectralParams, exterior_eigenvalue, ground_state


@dataclass(frozen=True)
class AsymptoticModel:
    """One asymptotic law: named coefficients plus a residual evaluator."""

    name: str
    coeffs: tuple  # ((form tag, value), ...)
    regime: str    # one of "b->0+", "b->inf", "n->inf"
    claimed_order: str
    residual: Callable[..., float]

    def __post_init__(self):
        if not self.coeffs:
            raise InvalidParameterError("an asymptotic model needs at least one coefficient")


def model_groundstate_strongfield() -> AsymptoticModel:
    """Strong-field ground-state law; residual r(b, nu) is the b^-1/2-scaled gap."""
    a = alpha_root()
    c0 = (a * a + 2.0) / 6.0

    def residual(b: float, nu: float = 0.0) -> float:
        gs = ground_state(b, nu)
        return (gs.value - a * math.sqrt(b) - c0) * math.sqrt(b)

    return AsymptoticModel(
        name="groundstate-strongfield",
        coeffs=(("sqrt(b)", a), ("1", c0)),
        regime="b->inf",
        claimed_order="O(b^-1/2)",
        residual=residual,
    )


def model_crossing(nu: float = 0.0) -> AsymptoticModel:
    """Large-n crossing-point law; residual r(n) is the (n-nu)^-1/2-scaled gap.

    Only the three explicitly known coefficients enter; the evaluator requires
    n >= 5 so the truncated law is meaningfully inside its regime.
    """
    a = alpha_root()
    c0 = (a * a + 2.0) / 3.0

    def predicted(n: int) -> float:
        m = n - nu
        return m - a * math.sqrt(m) + c0

    def residual(n: int) -> float:
        if n < 5:
            raise InvalidParameterError(f"crossing law evaluated for n >= 5, got n={n}")
        return (crossing(n, nu).z - predicted(n)) * math.sqrt(n - nu)

    return AsymptoticModel(
        name="crossing-large-n",
        coeffs=(("n-nu", 1.0), ("sqrt(n-nu)", -a), ("1", c0)),
        regime="n->inf",
        claimed_order="O(n^-1/2)",
        residual=residual,
    )


def weakfield_flux_coefficient(nu: float) -> float:
    """Coefficient of b^|nu| in the n = 0 weak-field gap at flux nu != 0:
    2 Gamma(1-|nu|) Gamma(|nu|+1/2) / (sqrt(pi) Gamma(|nu|))."""
    s = abs(nu)
    if not 0.0 < s <= 0.5:
        raise InvalidParameterError(f"flux coefficient needs 0 < |nu| <= 1/2, got nu={nu}")
    return (2.0 * gamma(1.0 - s).value * gamma(s + 0.5).value
            / (math.sqrt(math.pi) * gamma(s).value))


def _lam(n: int, b: float, nu: float) -> float:
    return exterior_eigenvalue(SpectralParams(n=n, b=b, nu=nu))


def model_weakfield(n: int, nu: float = 0.0) -> AsymptoticModel:
    """Weak-field law for mode n at flux nu; residual is evaluated at b.

    Zero flux:
        n = 0:     lambda_0(b) ~ -2/log b          -> r(b) = lambda_0 log b + 2
        |n| = 1:   lambda_n - 1 ~ sign(n) b log b  -> r(b) = ratio - sign(n)
        |n| >= 2:  lambda_n - |n| ~ -n/(|n|-1) b   -> r(b) = ratio + n/(|n|-1)
    Nonzero flux:
        n = 0:     gap ~ C(nu) b^|nu|              -> r(b) = ratio - C(nu)
        n = +-1:   gap = O(b^(1-|nu|))             -> r(b) = scaled gap
        |n| >= 2:  gap = O(b)                      -> r(b) = scaled gap
    """
    if nu == 0.0:
        if n == 0:
            def residual(b: float) -> float:
                return _lam(0, b, 0.0) * math.log(b) + 2.0
            return AsymptoticModel("weakfield-log", (("-2/log b", -2.0),),
                                   "b->0+", "O(1/log b)", residual)
        if abs(n) == 1:
            sign = 1.0 if n > 0 else -1.0

            def residual(b: float) -> float:
                return (_lam(n, b, 0.0) - 1.0) / (b * math.log(b)) - sign
            return AsymptoticModel("weakfield-blogb", (("b log b", sign),),
                                   "b->0+", "O(1/|log b|)", residual)

        slope = -n / (abs(n) - 1.0)

        def residual(b: float) -> float:
            return (_lam(n, b, 0.0) - abs(n)) / b - slope
        return AsymptoticModel("weakfield-linear", (("b", slope),),
                               "b->0+", "O(b)", residual)

    if n == 0:
        coef = weakfield_flux_coefficient(nu)
        s = abs(nu)

        def residual(b: float) -> float:
            return (_lam(0, b, nu) - s) / b ** s - coef
        return AsymptoticModel("weakfield-flux-power", ((f"b^{s:g}", coef),),
                               "b->0+", f"O(b^{s:g})", residual)
    if abs(n) == 1:
        limit = 1.0 - nu if n == 1 else 1.0 + nu
        expo = 1.0 - abs(nu)

        def residual(b: float) -> float:
            return (_lam(n, b, nu) - limit) / b ** expo
        return AsymptoticModel("weakfield-flux-mode1", (("1", limit),),
                               "b->0+", f"O(b^{expo:g})", residual)

    limit = abs(n - nu)

    def residual(b: float) -> float:
        return (_lam(n, b, nu) - limit) / b
    return AsymptoticModel("weakfield-flux-linear", (("1", limit),),
                           "b->0+", "O(b)", residual)


def fit_gap_exponent(nu: float, b_values=None) -> float:
    """Log-log slope of the n = 0 weak-field gap |lambda_0(b, nu) - |nu||.

    For 0 < |nu| <= 1/2 the slope should recover |nu| (the operator-norm decay
    rate).  Defaults to six log-spaced decades b = 1e-4 .. 1e-9.
    """
    if b_values is None:
        b_values = [10.0 ** (-k) for k in range(4, 10)]
    logs_b = np.log(np.asarray(b_values, dtype=float))
    gaps = np.array([abs(_lam(0, b, nu) - abs(nu)) for b in b_values])
    slope = np.polyfit(logs_b, np.log(gaps), 1)[0]
    return float(slope)
