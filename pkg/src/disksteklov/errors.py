"""Exception hierarchy for the disksteklov package.

Every failure mode raised by the library derives from DiskSteklovError, so
callers (in particular the CLI) can map numerical failures to a single exit
code while still distinguishing argument errors from runtime breakdowns.
"""


class DiskSteklovError(Exception):
    """Base class for all library errors."""


class PoleArgumentError(DiskSteklovError, ValueError):
    """Gamma evaluated at a nonpositive integer."""


class InvalidParameterError(DiskSteklovError, ValueError):
    """Argument outside the documented domain of an operation."""


class UnsupportedParameterError(DiskSteklovError, ValueError):
    """Parameter combination outside the supported routing envelope."""


class NonConvergenceError(DiskSteklovError, RuntimeError):
    """Series truncation cap reached before the convergence test passed."""


class QuadratureError(DiskSteklovError, RuntimeError):
    """Adaptive quadrature failed to reach the requested tolerance."""


class BracketError(DiskSteklovError, RuntimeError):
    """Root bracketing failed: no sign change on the search interval."""


class WindowOverflowError(DiskSteklovError, RuntimeError):
    """Ground-state mode search exceeded its window bound."""


class ShootingError(DiskSteklovError, RuntimeError):
    """ODE shooting failed (integrator breakdown or wrong-branch blow-up)."""
