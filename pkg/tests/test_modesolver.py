import math

import numpy as np
import pytest

from tapertpa import specfun
from tapertpa.errors import NoGuidedRootError
from tapertpa.modesolver import (
    ModeSolution,
    WaveguideGeometry,
    _residual_from_neff,
    dispersion_residual,
    group_velocity,
    make_geometry,
    silica_index,
    single_mode_cutoff_diameter,
    solve_he11,
    waveguide_v,
)

C = 299792458.0

# fundamental-mode effective index at the nominal point, frozen from the
# scan+bisection oracle at 1e-12 effective-index tolerance
N_EFF_NOMINAL = 1.0576034519396793


@pytest.fixture(scope="module")
def nominal_mode():
    return solve_he11(make_geometry(350e-9, 778.1e-9))


def test_silica_index_values():
    assert silica_index(778.1e-9) == pytest.approx(1.4537057804558535, rel=1e-12)
    assert silica_index(778.1e-9) == pytest.approx(1.4537, abs=2e-4)
    assert silica_index(587.6e-9) == pytest.approx(1.4585, abs=2e-4)


def test_silica_index_monotone_normal_dispersion():
    lams = np.linspace(500e-9, 1600e-9, 60)
    ns = [silica_index(l) for l in lams]
    assert all(b < a for a, b in zip(ns, ns[1:]))


def test_silica_index_domain():
    with pytest.raises(ValueError):
        silica_index(100e-9)
    with pytest.raises(ValueError):
        silica_index(4e-6)


def test_waveguide_v_nominal():
    g = make_geometry(350e-9, 778.1e-9)
    assert waveguide_v(g) == pytest.approx(1.4910111835841906, rel=1e-12)
    assert waveguide_v(g) == pytest.approx(1.491, abs=2e-3)


def test_waveguide_v_limits_and_linearity():
    lam = 778.1e-9
    v1 = waveguide_v(make_geometry(100e-9, lam))
    v2 = waveguide_v(make_geometry(200e-9, lam))
    assert v2 == pytest.approx(2 * v1, rel=1e-12)
    assert waveguide_v(make_geometry(1e-12, lam)) < 1e-5


def test_geometry_validation():
    with pytest.raises(ValueError):
        WaveguideGeometry(-1e-7, 778.1e-9, 1.45)
    with pytest.raises(ValueError):
        WaveguideGeometry(350e-9, 778.1e-9, 1.0, 1.0)  # n_core must exceed n_clad
    with pytest.raises(ValueError):
        WaveguideGeometry(350e-9, 778.1e-9, 1.45, 0.9)  # n_clad below vacuum


def test_nominal_root(nominal_mode):
    m = nominal_mode
    g = m.geometry
    assert 1.0 < m.n_eff < g.n_core
    assert m.n_eff == pytest.approx(N_EFF_NOMINAL, abs=1e-10)
    # algebraic identity of the waveguide parameters
    assert abs(m.U**2 + m.W**2 - m.V**2) / m.V**2 < 1e-10
    # guided window
    assert g.k0 * g.n_clad < m.beta < g.k0 * g.n_core
    assert m.single_mode


def test_residual_small_at_root(nominal_mode):
    m = nominal_mode
    rhs_scale = (m.n_eff / m.geometry.n_core) ** 2 * (m.V / (m.U * m.W)) ** 4
    assert abs(dispersion_residual(m.beta, m.geometry)) < 1e-10 * rhs_scale


def test_residual_sign_change_brackets_root(nominal_mode):
    g = nominal_mode.geometry
    grid = np.linspace(g.n_clad + 1e-6, g.n_core - 1e-6, 2000)
    res = _residual_from_neff(grid, g)
    ok = np.isfinite(res)
    changes = np.nonzero(ok[:-1] & ok[1:] & (np.sign(res[:-1]) * np.sign(res[1:]) < 0))[0]
    # single-mode geometry: exactly one bracket, containing the root
    assert len(changes) == 1
    i = changes[0]
    assert grid[i] <= nominal_mode.n_eff <= grid[i + 1]


def test_residual_domain_error():
    g = make_geometry(350e-9, 778.1e-9)
    with pytest.raises(ValueError):
        dispersion_residual(0.5 * g.k0, g)
    with pytest.raises(ValueError):
        dispersion_residual(1.5 * g.k0, g)


def test_no_root_near_cutoff():
    # V ~ 0.3: the fundamental root migrates below the scan floor
    with pytest.raises(NoGuidedRootError):
        solve_he11(make_geometry(70e-9, 778.1e-9))


def test_no_sign_change_above_w_floor_near_cutoff():
    g = make_geometry(70e-9, 778.1e-9)
    assert waveguide_v(g) < 0.3
    ak0 = g.a * g.k0
    grid = np.linspace(g.n_clad + 1e-6, g.n_core - 1e-6, 2000)
    w = ak0 * np.sqrt(grid**2 - g.n_clad**2)
    grid = grid[w > 1e-3]
    res = _residual_from_neff(grid, g)
    ok = np.isfinite(res)
    changes = np.sign(res[:-1]) * np.sign(res[1:]) < 0
    assert not np.any(changes & ok[:-1] & ok[1:])


def test_neff_monotone_in_diameter():
    ds = np.linspace(250e-9, 600e-9, 20)
    neffs = [solve_he11(make_geometry(d, 778.1e-9)).n_eff for d in ds]
    assert all(b > a for a, b in zip(neffs, neffs[1:]))


def test_large_diameter_limit():
    m = solve_he11(make_geometry(5e-6, 778.1e-9))
    n1 = m.geometry.n_core
    assert abs(m.n_eff - n1) < 1e-2
    assert not m.single_mode


def test_group_velocity_bounds():
    for d in np.linspace(250e-9, 600e-9, 8):
        m = solve_he11(make_geometry(d, 778.1e-9))
        assert 0.0 < m.v_g < C


def test_group_velocity_bulk_limit():
    lam = 778.1e-9
    h = 1e-11
    n_group = silica_index(lam) - lam * (silica_index(lam + h) - silica_index(lam - h)) / (2 * h)
    bulk = C / n_group
    assert bulk == pytest.approx(2.04e8, rel=2e-2)
    m = solve_he11(make_geometry(5e-6, lam))
    assert m.v_g == pytest.approx(bulk, rel=2e-2)


def test_group_velocity_stencil_convergence():
    g = make_geometry(350e-9, 778.1e-9)
    v1 = group_velocity(g, rel_step=1e-4)
    v2 = group_velocity(g, rel_step=5e-5)
    assert abs(v2 - v1) / v1 < 1e-6


def test_determinism(nominal_mode):
    again = solve_he11(make_geometry(350e-9, 778.1e-9))
    assert again == nominal_mode  # bit-identical dataclass comparison


def test_single_mode_cutoff():
    d = single_mode_cutoff_diameter(778.1e-9)
    assert d == pytest.approx(565e-9, abs=1e-9)
    v = waveguide_v(make_geometry(d, 778.1e-9))
    assert abs(v - 2.405) / 2.405 < 1e-9
    # linear in wavelength at fixed indices: the returned diameter matches the
    # closed-form inversion of V = 2.405 with that wavelength's core index
    for lam in (600e-9, 778.1e-9, 1000e-9):
        n1 = silica_index(lam)
        expected = 2.405 * lam / (math.pi * math.sqrt(n1**2 - 1.0))
        assert single_mode_cutoff_diameter(lam) == pytest.approx(expected, rel=1e-14)


def test_solution_is_frozen(nominal_mode):
    with pytest.raises(Exception):
        nominal_mode.beta = 0.0
