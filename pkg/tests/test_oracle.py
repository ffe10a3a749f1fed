"""Unit tests for the Riccati-shooting oracle."""

import pytest

from disksteklov import oracle, steklov
from disksteklov.errors import InvalidParameterError
from disksteklov.oracle import OUTWARD, ShootConfig
from disksteklov.steklov import SpectralParams


def test_exterior_matches_closed_form():
    p = SpectralParams(n=0, b=1.0, nu=0.0)
    closed = steklov.exterior_eigenvalue(p)
    shot = oracle.exterior_shoot(p)
    assert abs(shot - closed) <= 1e-6 * (1.0 + abs(closed))


def test_exterior_grid_subset():
    for n, b, nu in ((5, 1.0, 0.0), (-10, 0.5, 0.25), (10, 20.0, 0.5), (3, 5.0, 0.25)):
        p = SpectralParams(n=n, b=b, nu=nu)
        closed = steklov.exterior_eigenvalue(p)
        shot = oracle.exterior_shoot(p)
        assert abs(shot - closed) <= 1e-6 * (1.0 + abs(closed))
        assert shot > 0.0


def test_seed_robustness_attracting_branch():
    # a 10% seed perturbation must wash out on the way in
    p = SpectralParams(n=0, b=1.0, nu=0.0)
    cfg = ShootConfig()
    m = p.n - p.nu
    r_max = oracle._default_r_max(m, p.b)
    w0 = -p.b * r_max + (m - 1.0) / r_max
    base = -oracle._integrate(m, p.b, r_max, 1.0, w0, cfg)
    perturbed = -oracle._integrate(m, p.b, r_max, 1.0, 1.1 * w0, cfg)
    assert abs(base - perturbed) < 1e-6


def test_r_max_robustness():
    p = SpectralParams(n=0, b=1.0, nu=0.0)
    m = p.n - p.nu
    base = oracle.exterior_shoot(p)
    doubled = oracle.exterior_shoot(p, ShootConfig(r_max=2.0 * oracle._default_r_max(m, p.b)))
    assert abs(base - doubled) < 1e-8


def test_tolerance_halving_stability():
    p = SpectralParams(n=3, b=2.0, nu=0.25)
    loose = oracle.exterior_shoot(p, ShootConfig(abs_tol=1e-11, rel_tol=1e-11))
    tight = oracle.exterior_shoot(p, ShootConfig(abs_tol=5e-12, rel_tol=5e-12))
    assert abs(loose - tight) <= 10.0 * 1e-11 * (1.0 + abs(loose))


def test_small_r_max_recovers_by_restart():
    # deliberately undersized start radius: either the seed still converges or
    # the blow-up detector retries with a larger radius; the answer must match
    p = SpectralParams(n=10, b=0.5, nu=0.0)
    closed = steklov.exterior_eigenvalue(p)
    shot = oracle.exterior_shoot(p, ShootConfig(r_max=4.0))
    assert abs(shot - closed) <= 1e-4 * (1.0 + abs(closed))


def test_exterior_requires_positive_field():
    with pytest.raises(InvalidParameterError):
        oracle.exterior_shoot(SpectralParams(n=0, b=0.0, nu=0.0))
    with pytest.raises(InvalidParameterError):
        oracle.exterior_shoot(SpectralParams(n=0, b=-1.0, nu=0.0))


def test_interior_free_laplacian():
    assert oracle.interior_shoot(4, 0.0) == pytest.approx(4.0, abs=1e-5)


def test_interior_flux_only():
    assert oracle.interior_shoot(0, 0.0, 0.25) == pytest.approx(0.25, abs=1e-5)


def test_interior_matches_closed_form():
    shot = oracle.interior_shoot(3, 2.0)
    closed = steklov.interior_eigenvalue(3, 2.0)
    assert abs(shot - closed) <= 1e-6 * (1.0 + abs(closed))


def test_shoot_config_validation():
    with pytest.raises(InvalidParameterError):
        ShootConfig(r_max=0.5)
    with pytest.raises(InvalidParameterError):
        ShootConfig(r_min=1.5)
    with pytest.raises(InvalidParameterError):
        ShootConfig(rel_tol=1e-3)
    with pytest.raises(InvalidParameterError):
        ShootConfig(direction="sideways")


def test_direction_mismatch_rejected():
    with pytest.raises(InvalidParameterError):
        oracle.exterior_shoot(SpectralParams(n=0, b=1.0, nu=0.0),
                              ShootConfig(direction=OUTWARD))
    with pytest.raises(InvalidParameterError):
        oracle.interior_shoot(0, 1.0, 0.0, ShootConfig())
