"""Total two-photon absorption rate, fractional absorption, and sweeps.

The local steady-state absorption rate scales with the fourth power of the
evanescent field, so the total rate is the atomic prefactor times the vapor
density times the volume integral of |E_a|^2 |E_b|^2 outside the core over
the tapered length. Both counter-propagating beams share one radial profile
per wavelength; for two-color operation the two profiles differ and the
near-resonant detuning of beam a sets the denominator.

Sweeps are embarrassingly parallel over grid points; tables are assembled in
grid order regardless of thread count so output files are reproducible
byte-for-byte.
"""

from __future__ import annotations

import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from .constants import HBAR, BeamSpec, wavelength_to_omega, omega_to_wavelength
from .dynamics import AtomParams
from .errors import NoGuidedRootError
from .modefield import (
    NormalizedMode,
    _exterior_components,
    _integrate_exterior,
    _phi_grid,
    classical_amplitude_sq,
    normalize_mode,
)
from .modesolver import WaveguideGeometry, make_geometry, solve_he11
from .output import ResultTable

# Rubidium D2 line; reference for the one-photon detuning in two-color sweeps.
RB_D2_WAVELENGTH = 780.24e-9

ORIENTATION_FACTORS = {"none": 1.0, "isotropic": 1.0 / 9.0}

SATURATION_ABSORPTION = 0.2


@dataclass(frozen=True)
class TpaScenario:
    """Complete experiment description for one rate evaluation."""

    diameter: float
    taper_length: float
    density: float
    beam_a: BeamSpec
    beam_b: BeamSpec
    atom: AtomParams
    n_clad: float = 1.0
    orientation_averaging: str = "none"
    quadrature_rel_tol: float = 1e-8

    def __post_init__(self):
        if self.diameter <= 0:
            raise ValueError("diameter must be positive")
        if self.taper_length <= 0:
            raise ValueError("taper length must be positive")
        if self.density < 0:
            raise ValueError("vapor density must be >= 0")
        if self.orientation_averaging not in ORIENTATION_FACTORS:
            raise ValueError(
                f"orientation_averaging must be one of {sorted(ORIENTATION_FACTORS)}"
            )
        if self.quadrature_rel_tol <= 0:
            raise ValueError("quadrature_rel_tol must be positive")

    @property
    def degenerate(self) -> bool:
        return self.beam_a.wavelength == self.beam_b.wavelength

    def geometry(self, wavelength: float) -> WaveguideGeometry:
        return make_geometry(self.diameter, wavelength, self.n_clad)


@dataclass(frozen=True)
class TpaResult:
    """Outputs of a rate evaluation."""

    r2_total: float
    absorption_fraction: float
    field4_integral: float
    mode_a: NormalizedMode
    mode_b: NormalizedMode
    saturation_warning: bool


def _tail_rel(s: TpaScenario) -> float:
    # exterior-panel truncation well below the requested relative tolerance
    return max(1e-4 * s.quadrature_rel_tol, 1e-15)


def field4_exterior_integral(
    nmode_a: NormalizedMode,
    nmode_b: NormalizedMode,
    power_a: float,
    power_b: float,
    length: float,
    n_radial: int = 32,
    n_phi: int = 64,
    tail_rel: float = 1e-13,
    l_q: float = 1.0,
) -> float:
    """Volume integral of |E_a|^2 |E_b|^2 outside the core over a taper length.

    Both modes must share the core geometry. The classical per-beam squared
    amplitudes come from the group-velocity power mapping; degenerate beams
    reduce the integrand to |E_cl|^4.
    """
    mode_a, mode_b = nmode_a.mode, nmode_b.mode
    if mode_a.geometry.diameter != mode_b.geometry.diameter:
        raise ValueError("modes must share the same core diameter")
    if power_a < 0 or power_b < 0:
        raise ValueError("beam powers must be >= 0")
    if power_a == 0.0 or power_b == 0.0:
        return 0.0

    scale_a = classical_amplitude_sq(nmode_a, power_a, l_q)
    scale_b = classical_amplitude_sq(nmode_b, power_b, l_q)

    phi, wphi = _phi_grid(n_phi)

    def ring(r):
        er_a, ep_a, ez_a = _exterior_components(mode_a, r[:, None], phi[None, :])
        er_b, ep_b, ez_b = _exterior_components(mode_b, r[:, None], phi[None, :])
        mag_a = np.abs(er_a) ** 2 + np.abs(ep_a) ** 2 + np.abs(ez_a) ** 2
        mag_b = np.abs(er_b) ** 2 + np.abs(ep_b) ** 2 + np.abs(ez_b) ** 2
        return np.sum(mag_a * mag_b, axis=1) * wphi

    # |e_a|^2 |e_b|^2 decays like exp(-2(q_a + q_b) r) outside the core
    q_sum = mode_a.W / mode_a.a + mode_b.W / mode_b.a
    radial = _integrate_exterior(ring, mode_a.a, 2.0 * q_sum, n_radial, tail_rel)
    return length * scale_a * scale_b * radial


def atomic_rate_prefactor(atom: AtomParams) -> float:
    """64 d1^2 d2^2 / (hbar^4 (4 delta^2 + gamma1^2) gamma2), in s^-1 per |E|^4."""
    return (
        64.0
        * atom.d1**2
        * atom.d2**2
        / (HBAR**4 * (4.0 * atom.delta**2 + atom.gamma1**2) * atom.gamma2)
    )


def fractional_absorption(r2: float, s: TpaScenario) -> float:
    """Energy lost to two-photon absorption divided by the incident energy."""
    if r2 < 0:
        raise ValueError("rate must be >= 0")
    total_power = s.beam_a.power + s.beam_b.power
    if total_power == 0.0:
        if r2 == 0.0:
            return 0.0
        raise ValueError("zero total power with a nonzero absorption rate")
    energy_per_event = HBAR * s.beam_a.omega + HBAR * s.beam_b.omega
    return energy_per_event * r2 / total_power


def total_rate(s: TpaScenario, l_q: float = 1.0, n_radial: int = 32, n_phi: int = 64) -> TpaResult:
    """Evaluate the total absorption rate and fractional absorption."""
    tail = _tail_rel(s)
    try:
        mode_a = solve_he11(s.geometry(s.beam_a.wavelength))
        nmode_a = normalize_mode(mode_a, n_radial, n_phi, tail)
        if s.degenerate:
            nmode_b = nmode_a
        else:
            mode_b = solve_he11(s.geometry(s.beam_b.wavelength))
            nmode_b = normalize_mode(mode_b, n_radial, n_phi, tail)
        field4 = field4_exterior_integral(
            nmode_a,
            nmode_b,
            s.beam_a.power,
            s.beam_b.power,
            s.taper_length,
            n_radial,
            n_phi,
            tail,
            l_q,
        )
    except NoGuidedRootError as exc:
        raise NoGuidedRootError(
            f"{exc} (scenario: D={s.diameter * 1e9:.1f} nm, "
            f"lambda_a={s.beam_a.wavelength * 1e9:.2f} nm)"
        ) from exc

    orient = ORIENTATION_FACTORS[s.orientation_averaging]
    r2 = orient * atomic_rate_prefactor(s.atom) * s.density * field4
    a_raw = fractional_absorption(r2, s)
    saturated = a_raw > SATURATION_ABSORPTION
    if saturated:
        warnings.warn(
            f"fractional absorption {a_raw:.3g} exceeds {SATURATION_ABSORPTION}; "
            "the undepleted-beam rate formula is strained",
            stacklevel=2,
        )
    return TpaResult(
        r2_total=r2,
        absorption_fraction=min(a_raw, 1.0),
        field4_integral=field4,
        mode_a=nmode_a,
        mode_b=nmode_b,
        saturation_warning=saturated,
    )


# ---------------------------------------------------------------------------
# Sweeps
# ---------------------------------------------------------------------------

DIAMETER_SWEEP_COLUMNS = (
    "diameter_nm",
    "r2_per_s",
    "absorption_fraction",
    "evanescent_fraction",
    "n_eff",
    "single_mode",
)

DETUNING_SWEEP_COLUMNS = ("delta_rad_per_s", "r2_per_s", "absorption_fraction")


@dataclass(frozen=True)
class DiameterSweepResult:
    table: ResultTable
    best_diameter: float | None
    best_rate: float | None
    gaps: tuple[float, ...]


def _map_points(fn, points, threads: int):
    if threads <= 1:
        return [fn(x) for x in points]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, points))


def sweep_diameter(
    s: TpaScenario,
    d_min: float,
    d_max: float,
    step: float,
    threads: int = 1,
    refine: bool = True,
) -> DiameterSweepResult:
    """Rate vs. core diameter on a uniform grid, with the maximum refined.

    Diameters whose mode is too close to cutoff are recorded as gaps rather
    than aborting the sweep. When the grid maximum is interior, it is refined
    by golden-section search to half-nanometer resolution.
    """
    if not 0 < d_min < d_max:
        raise ValueError("need 0 < d_min < d_max")
    if step <= 0:
        raise ValueError("step must be positive")
    n_steps = int(math.floor((d_max - d_min) / step + 0.5))
    diameters = [d_min + k * step for k in range(n_steps + 1) if d_min + k * step <= d_max * (1 + 1e-12)]

    def evaluate(d: float):
        scenario = replace(s, diameter=d)
        try:
            res = total_rate(scenario)
        except NoGuidedRootError:
            return d, None
        return d, res

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        outcomes = _map_points(evaluate, diameters, threads)

    table = ResultTable(list(DIAMETER_SWEEP_COLUMNS))
    gaps = []
    solved = []
    for d, res in outcomes:
        if res is None:
            gaps.append(d)
            continue
        solved.append((d, res))
        table.append(
            [
                d * 1e9,
                res.r2_total,
                res.absorption_fraction,
                res.mode_a.evanescent_fraction,
                res.mode_a.mode.n_eff,
                1.0 if res.mode_a.mode.single_mode else 0.0,
            ]
        )

    if not solved:
        return DiameterSweepResult(table, None, None, tuple(gaps))

    rates = [res.r2_total for _, res in solved]
    i_best = int(np.argmax(rates))
    best_d, best_r = solved[i_best][0], rates[i_best]

    interior = 0 < i_best < len(solved) - 1
    if refine and interior:
        lo, hi = solved[i_best - 1][0], solved[i_best + 1][0]

        def rate_at(d: float) -> float:
            _, res = evaluate(d)
            return res.r2_total if res is not None else -math.inf

        best_d, best_r = _golden_max(rate_at, lo, hi, xtol=0.5e-9)
    return DiameterSweepResult(table, best_d, best_r, tuple(gaps))


def _golden_max(f, lo: float, hi: float, xtol: float) -> tuple[float, float]:
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    x1 = hi - invphi * (hi - lo)
    x2 = lo + invphi * (hi - lo)
    f1, f2 = f(x1), f(x2)
    while hi - lo > xtol:
        if f1 < f2:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + invphi * (hi - lo)
            f2 = f(x2)
        else:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - invphi * (hi - lo)
            f1 = f(x1)
    x_best = 0.5 * (lo + hi)
    return x_best, f(x_best)


def two_color_wavelengths(delta: float, resonance_wavelength: float) -> tuple[float, float]:
    """Beam wavelengths for a one-photon detuning ``delta`` (rad/s).

    Beam a sits ``delta`` above the Rb D2 line; beam b completes two-photon
    resonance with the degenerate pair at ``resonance_wavelength``:
    w_a + w_b = 2 w(resonance_wavelength).
    """
    w_a = wavelength_to_omega(RB_D2_WAVELENGTH) + delta
    w_b = 2.0 * wavelength_to_omega(resonance_wavelength) - w_a
    if w_b <= 0:
        raise ValueError(f"detuning {delta:.4g} rad/s leaves no energy for beam b")
    return omega_to_wavelength(w_a), omega_to_wavelength(w_b)


def sweep_detuning(
    s: TpaScenario,
    delta_min: float,
    delta_max: float,
    n_points: int,
    spacing: str = "log",
    threads: int = 1,
) -> ResultTable:
    """Two-color absorption vs. the one-photon detuning (rad/s).

    At each detuning, beam a is tuned ``delta`` above the Rb D2 line and
    beam b to two-photon resonance with the scenario's degenerate pair; the
    rate uses |E_a|^2 |E_b|^2 and the beam-a detuning in the denominator.
    """
    if not 0 < delta_min < delta_max:
        raise ValueError("need 0 < delta_min < delta_max")
    if n_points < 2:
        raise ValueError("need at least 2 sweep points")
    if spacing == "log":
        deltas = np.logspace(math.log10(delta_min), math.log10(delta_max), n_points)
    elif spacing == "linear":
        deltas = np.linspace(delta_min, delta_max, n_points)
    else:
        raise ValueError("spacing must be 'linear' or 'log'")

    resonance = s.beam_a.wavelength

    def evaluate(delta: float):
        lam_a, lam_b = two_color_wavelengths(delta, resonance)
        scenario = replace(
            s,
            beam_a=replace(s.beam_a, wavelength=lam_a),
            beam_b=replace(s.beam_b, wavelength=lam_b),
            atom=replace(s.atom, delta=delta),
        )
        try:
            res = total_rate(scenario)
        except NoGuidedRootError:
            return delta, None
        return delta, res

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        outcomes = _map_points(evaluate, [float(d) for d in deltas], threads)

    table = ResultTable(list(DETUNING_SWEEP_COLUMNS))
    for delta, res in outcomes:
        if res is None:
            continue
        table.append([delta, res.r2_total, res.absorption_fraction])
    return table
