"""Two-photon absorption in subwavelength tapered fibers surrounded by an
atomic vapor: mode solving, evanescent-field normalization, four-state
density-matrix dynamics, and rate/absorption calculations with sweeps.
"""

from .constants import (
    BeamSpec,
    PhysicalConstants,
    CONSTANTS,
    detuning_wavelength_to_angular,
    dipole_from_radius,
    omega_to_wavelength,
    wavelength_to_omega,
)
from .dynamics import (
    AtomParams,
    analytic_p2,
    evolve_amplitudes,
    evolve_density,
    interaction_matrix,
    local_steady_rate,
    perturbative_p2,
    verify_factorization,
)
from .engine import (
    TpaResult,
    TpaScenario,
    field4_exterior_integral,
    fractional_absorption,
    sweep_detuning,
    sweep_diameter,
    total_rate,
    two_color_wavelengths,
)
from .errors import (
    DegenerateDenominatorError,
    IntegrationError,
    NoGuidedRootError,
    QuadratureError,
    TaperTpaError,
)
from .modefield import (
    FieldVector,
    NormalizedMode,
    classical_amplitude_sq,
    evanescent_fraction,
    field_at,
    field_magnitude_sq,
    interface_mismatch,
    norm_integral,
    norm_integral_parts,
    normalize_mode,
    single_photon_amplitude,
)
from .modesolver import (
    ModeSolution,
    WaveguideGeometry,
    dispersion_residual,
    group_velocity,
    make_geometry,
    silica_index,
    single_mode_cutoff_diameter,
    solve_he11,
    waveguide_v,
)
from .output import ResultTable, read_csv, write_csv
from .config import ConfigError, ScenarioConfig, load_config, parse_config, scenario_from_config, serialize_config

__version__ = "0.1.0"
