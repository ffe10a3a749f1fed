"""Special-function identity checks shared by the unit and acceptance suites.

Each function runs one family of checks over its fixed grid and returns a
list of (label, residual, bound) triples; a residual above its bound is a
failure.  Residuals are scaled by the largest participating term, so the
bounds are meaningful from z = 0.1 up to regimes where the raw values are
astronomically large.
"""

import math

from disksteklov import specfun

CONTIGUOUS_TOL = 1e-9
ODE_TOL = 1e-8
RECURRENCE_TOL = 1e-8

U_GRID_A = (0.5, 1.5)
U_GRID_C = tuple(range(2, 13))
U_GRID_Z = (0.1, 1.0, 10.0, 100.0)


def _u(a, c, z):
    return specfun.tricomi_u(a, c, z).value


def contiguous_relation_checks():
    """U(a,c,z) - U(a,c-1,z) - a U(a+1,c,z) = 0  and
    U(a-1,c,z) + (c-a) U(a,c,z) - z U(a,c+1,z) = 0."""
    results = []
    for a in U_GRID_A:
        for c in U_GRID_C:
            for z in U_GRID_Z:
                t1, t2, t3 = _u(a, c, z), _u(a, c - 1, z), a * _u(a + 1, c, z)
                scale = max(abs(t1), abs(t2), abs(t3))
                results.append((f"contiguous-A a={a} c={c} z={z}",
                                abs(t1 - t2 - t3) / scale, CONTIGUOUS_TOL))
                t1 = _u(a - 1.0, c, z)
                t2 = (c - a) * _u(a, c, z)
                t3 = z * _u(a, c + 1, z)
                scale = max(abs(t1), abs(t2), abs(t3))
                results.append((f"contiguous-B a={a} c={c} z={z}",
                                abs(t1 + t2 - t3) / scale, CONTIGUOUS_TOL))
    return results


def kummer_ode_checks():
    """z M'' + (c - z) M' - a M = 0 with derivatives from the shift identity."""
    results = []
    for a in U_GRID_A:
        for c in U_GRID_C:
            for z in U_GRID_Z:
                m = specfun.kummer_m(a, c, z).value
                m1 = a / c * specfun.kummer_m(a + 1, c + 1, z).value
                m2 = a * (a + 1) / (c * (c + 1)) * specfun.kummer_m(a + 2, c + 2, z).value
                t1, t2, t3 = z * m2, (c - z) * m1, a * m
                scale = max(abs(t1), abs(t2), abs(t3))
                results.append((f"kummer-ode a={a} c={c} z={z}",
                                abs(t1 + t2 - t3) / scale, ODE_TOL))
    return results


def tricomi_ode_checks():
    """z U'' + (c - z) U' - a U = 0 with derivatives from the shift identity."""
    results = []
    for a in U_GRID_A:
        for c in U_GRID_C:
            for z in U_GRID_Z:
                u = _u(a, c, z)
                u1 = -a * _u(a + 1, c + 1, z)
                u2 = a * (a + 1) * _u(a + 2, c + 2, z)
                t1, t2, t3 = z * u2, (c - z) * u1, a * u
                scale = max(abs(t1), abs(t2), abs(t3))
                results.append((f"tricomi-ode a={a} c={c} z={z}",
                                abs(t1 + t2 - t3) / scale, ODE_TOL))
    return results


def _d(mu, z):
    return specfun.parabolic_d(mu, z).value


def parabolic_ode_checks():
    """w'' + (mu + 1/2 - z^2/4) w = 0 for w = D_mu, via the first-order relations.

    D_mu' = mu D_{mu-1} - (z/2) D_mu gives
    D_mu'' = mu(mu-1) D_{mu-2} - mu z D_{mu-1} + (z^2/4 - 1/2) D_mu.
    """
    results = []
    for mu in (-1.5, -0.5):
        for z in [-3.0 + 0.5 * k for k in range(13)]:
            d0 = _d(mu, z)
            d1 = _d(mu - 1.0, z)
            d2 = _d(mu - 2.0, z)
            w2 = mu * (mu - 1.0) * d2 - mu * z * d1 + (0.25 * z * z - 0.5) * d0
            residual = w2 + (mu + 0.5 - 0.25 * z * z) * d0
            scale = max(abs(d0), abs(d1), abs(d2), 1e-30)
            results.append((f"parabolic-ode mu={mu} z={z}",
                            abs(residual) / scale, ODE_TOL))
    return results


def recurrence_checks():
    """Three-term relation D_{mu+1} - z D_mu + mu D_{mu-1} = 0 around mu = -1/2."""
    results = []
    for z in (-0.5, 0.0, 0.7, 2.0):
        lhs = _d(0.5, z) - z * _d(-0.5, z) + (-0.5) * _d(-1.5, z)
        scale = max(abs(_d(0.5, z)), abs(z * _d(-0.5, z)), abs(0.5 * _d(-1.5, z)), 1.0)
        results.append((f"recurrence z={z}", abs(lhs) / scale, 1e-10))
    return results


def positivity_checks():
    """Certified positivity: value - abs_err > 0 on the positive-routing grids."""
    results = []
    for a in U_GRID_A:
        for c in (0.5, 2.0, 7.0, 12.0):
            for z in U_GRID_Z:
                fv = specfun.tricomi_u(a, c, z)
                results.append((f"positivity-U a={a} c={c} z={z}",
                                0.0 if fv.value - fv.abs_err > 0.0 else 1.0, 0.5))
    for mu in (-2.5, -1.5, -0.5):
        for z in (-2.0, 0.0, 3.0):
            fv = specfun.parabolic_d(mu, z)
            results.append((f"positivity-D mu={mu} z={z}",
                            0.0 if fv.value - fv.abs_err > 0.0 else 1.0, 0.5))
    return results


def derivative_fd_checks():
    """Shift-identity derivatives against centered finite differences."""
    results = []
    h = 1e-6
    for a, c, z in ((0.5, 2.0, 0.7), (0.5, 3.0, 2.0), (1.5, 5.0, 1.3)):
        md = specfun.kummer_m_dz(a, c, z).value
        fd = (specfun.kummer_m(a, c, z + h).value
              - specfun.kummer_m(a, c, z - h).value) / (2 * h)
        results.append((f"fd-M a={a} c={c} z={z}",
                        abs(md - fd) / (1.0 + abs(fd)), 1e-8))
        ud = specfun.tricomi_u_dz(a, c, z).value
        fd = (_u(a, c, z + h) - _u(a, c, z - h)) / (2 * h)
        results.append((f"fd-U a={a} c={c} z={z}",
                        abs(ud - fd) / (1.0 + abs(fd)), 1e-8))
    return results


def asymptotic_sandwich_checks():
    """|z^a U(a,c,z) - 1| <= 2 |a(a+1-c)| / z for large z."""
    results = []
    for a, c in ((0.5, 2.0), (0.5, 6.0), (1.5, 3.0)):
        for z in (100.0, 1000.0, 10000.0):
            lhs = abs(z ** a * _u(a, c, z) - 1.0)
            bound = 2.0 * abs(a * (a + 1.0 - c)) / z
            results.append((f"sandwich a={a} c={c} z={z}", lhs, bound))
    return results


def uniform_large_n_checks(cap: float = 1.0):
    """n/z + U'(1/2,n+1,z)/U(1/2,n+1,z) = 1 + O(1/n), uniformly for z in (0,1]."""
    results = []
    fitted = 0.0
    for n in (50, 100, 200, 500):
        for z in (0.01, 0.1, 0.3, 0.5, 1.0):
            expr = n / z + specfun.tricomi_u_log_deriv(n + 1.0, z)
            c_val = abs(expr - 1.0) * n
            fitted = max(fitted, c_val)
            results.append((f"uniform-n n={n} z={z}", c_val, cap))
    return results, fitted


def all_identity_checks():
    checks = []
    checks += contiguous_relation_checks()
    checks += kummer_ode_checks()
    checks += tricomi_ode_checks()
    checks += parabolic_ode_checks()
    checks += recurrence_checks()
    checks += positivity_checks()
    checks += derivative_fd_checks()
    checks += asymptotic_sandwich_checks()
    uniform, _ = uniform_large_n_checks()
    checks += uniform
    return checks
