"""Command-line interface.

Subcommands: mode, profile, rate, sweep-diameter, sweep-detuning, dynamics,
verify. Exit codes: 0 success, 1 physics/numerics failure, 2 usage or
configuration error. All file outputs are CSV; identical inputs produce
byte-identical outputs.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

import numpy as np

from . import dynamics, modefield
from .config import ConfigError, load_config, scenario_from_config
from .constants import HBAR
from .engine import (
    DETUNING_SWEEP_COLUMNS,
    DIAMETER_SWEEP_COLUMNS,
    TpaScenario,
    sweep_detuning,
    sweep_diameter,
    total_rate,
)
from .errors import DegenerateDenominatorError, TaperTpaError
from .modefield import classical_amplitude_sq, normalize_mode
from .modesolver import make_geometry, solve_he11
from .output import ResultTable, write_csv
from .verify import run_verification


def _fmt(v: float) -> str:
    return format(float(v), ".12e")


def _threads(args) -> int:
    env = os.environ.get("TAPER_TPA_THREADS")
    if env is not None:
        try:
            return max(1, int(env))
        except ValueError:
            raise ConfigError(f"TAPER_TPA_THREADS must be an integer, got {env!r}")
    return max(1, args.threads)


def _scenario(args) -> TpaScenario:
    if args.config is None:
        raise ConfigError("--config PATH is required for this subcommand")
    try:
        return scenario_from_config(load_config(args.config))
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {args.config}")


def _geometry_from_args(args):
    if args.config is not None:
        s = _scenario(args)
        return s.geometry(s.beam_a.wavelength), s
    if args.wavelength_nm is None or args.diameter_nm is None:
        raise ConfigError("need --config or both --wavelength-nm and --diameter-nm")
    if args.wavelength_nm <= 0 or args.diameter_nm <= 0:
        raise ConfigError("wavelength and diameter must be positive")
    return make_geometry(args.diameter_nm * 1e-9, args.wavelength_nm * 1e-9, args.n_clad), None


def _cmd_mode(args) -> int:
    geom, _ = _geometry_from_args(args)
    mode = solve_he11(geom)
    nmode = normalize_mode(mode)
    print(f"beta_rad_per_m = {_fmt(mode.beta)}")
    print(f"n_eff = {_fmt(mode.n_eff)}")
    print(f"U = {_fmt(mode.U)}")
    print(f"W = {_fmt(mode.W)}")
    print(f"V = {_fmt(mode.V)}")
    print(f"v_g_m_per_s = {_fmt(mode.v_g)}")
    print(f"evanescent_fraction = {_fmt(nmode.evanescent_fraction)}")
    print(f"single_mode = {int(mode.single_mode)}")
    return 0


def _cmd_profile(args) -> int:
    geom, scenario = _geometry_from_args(args)
    mode = solve_he11(geom)
    scale = 1.0
    if scenario is not None:
        scale = classical_amplitude_sq(normalize_mode(mode), scenario.beam_a.power)
    amp = math.sqrt(scale)
    r_vals = np.linspace(0.0, args.rmax_factor * mode.a, args.nr)
    phi_vals = np.linspace(0.0, 2.0 * math.pi, args.nphi, endpoint=False)
    table = ResultTable(
        ["r_nm", "phi_rad", "Er_re", "Er_im", "Ephi_re", "Ephi_im", "Ez_re", "Ez_im", "E2"]
    )
    for r in r_vals:
        for phi in phi_vals:
            f = modefield.field_at(mode, float(r), float(phi))
            table.append(
                [
                    r * 1e9,
                    phi,
                    amp * f.E_r.real,
                    amp * f.E_r.imag,
                    amp * f.E_phi.real,
                    amp * f.E_phi.imag,
                    amp * f.E_z.real,
                    amp * f.E_z.imag,
                    scale * f.magnitude_sq,
                ]
            )
    write_csv(table, args.output)
    print(f"wrote {len(table.rows)} field samples to {args.output}")
    return 0


def _cmd_rate(args) -> int:
    s = _scenario(args)
    res = total_rate(s)
    print(f"R2_per_s = {_fmt(res.r2_total)}")
    print(f"absorption_fraction = {_fmt(res.absorption_fraction)}")
    print(f"field4_integral = {_fmt(res.field4_integral)}")
    if res.saturation_warning:
        print("warning = absorption exceeds 20%; undepleted-beam formula strained")
    return 0


def _cmd_sweep_diameter(args) -> int:
    s = _scenario(args)
    if not 0 < args.dmin_nm < args.dmax_nm:
        raise ConfigError("need 0 < --dmin-nm < --dmax-nm")
    if args.step_nm <= 0:
        raise ConfigError("--step-nm must be positive")
    result = sweep_diameter(
        s,
        args.dmin_nm * 1e-9,
        args.dmax_nm * 1e-9,
        args.step_nm * 1e-9,
        threads=_threads(args),
    )
    write_csv(result.table, args.output)
    print(f"wrote {len(result.table.rows)} rows ({','.join(DIAMETER_SWEEP_COLUMNS)}) to {args.output}")
    if result.gaps:
        print(f"gaps_nm = {','.join(f'{g * 1e9:.1f}' for g in result.gaps)}")
    if result.best_diameter is not None:
        print(f"best_diameter_nm = {_fmt(result.best_diameter * 1e9)}")
        print(f"best_r2_per_s = {_fmt(result.best_rate)}")
    return 0


def _cmd_sweep_detuning(args) -> int:
    s = _scenario(args)
    if not 0 < args.delta_min < args.delta_max:
        raise ConfigError("need 0 < --delta-min < --delta-max")
    if args.points < 2:
        raise ConfigError("--points must be at least 2")
    unit_scale = 2.0 * math.pi if args.delta_unit == "hz" else 1.0
    table = sweep_detuning(
        s,
        args.delta_min * unit_scale,
        args.delta_max * unit_scale,
        args.points,
        spacing=args.spacing,
        threads=_threads(args),
    )
    write_csv(table, args.output)
    print(f"wrote {len(table.rows)} rows ({','.join(DETUNING_SWEEP_COLUMNS)}) to {args.output}")
    return 0


def _cmd_dynamics(args) -> int:
    s = _scenario(args)
    if args.tmax_s is not None and args.tmax_s <= 0:
        raise ConfigError("--tmax-s must be positive")
    if args.samples < 2:
        raise ConfigError("--samples must be at least 2")
    t_max = args.tmax_s if args.tmax_s is not None else 10.0 / min(s.atom.gamma1, s.atom.gamma2)

    mode = solve_he11(s.geometry(s.beam_a.wavelength))
    nmode = normalize_mode(mode)
    e2_surface = classical_amplitude_sq(nmode, s.beam_a.power) * modefield.field_magnitude_sq(
        mode, mode.a, 0.0
    )
    atom = dynamics.AtomParams.with_local_field(
        s.atom.d1, s.atom.d2, s.atom.gamma1, s.atom.gamma2, s.atom.delta,
        math.sqrt(e2_surface),
    )

    t_grid = np.linspace(0.0, t_max, args.samples + 1)[1:]
    rho0 = np.outer(dynamics.GROUND_4, dynamics.GROUND_4.conj())
    rhos = dynamics.evolve_density(rho0, atom, t_grid)
    alphas = dynamics.evolve_amplitudes(dynamics.GROUND_4, atom, t_grid)
    p2_pert = dynamics.perturbative_p2(atom, t_grid)
    try:
        p2_closed = dynamics.analytic_p2(atom, e2_surface**2, t_grid)
    except DegenerateDenominatorError:
        p2_closed = np.full_like(t_grid, math.nan)

    table = ResultTable(
        [
            "t_s", "rho11", "rho22", "rho33", "rho44", "trace",
            "p2_analytic", "p2_perturbative", "factorization_error",
        ]
    )
    for k, t in enumerate(t_grid):
        rho = rhos[k]
        outer = np.outer(alphas[k], alphas[k].conj())
        table.append(
            [
                t,
                rho[0, 0].real,
                rho[1, 1].real,
                rho[2, 2].real,
                rho[3, 3].real,
                rho.trace().real,
                p2_closed[k],
                p2_pert[k],
                float(np.max(np.abs(rho - outer))),
            ]
        )
    write_csv(table, args.output)
    print(f"wrote {len(table.rows)} dynamics samples to {args.output}")
    return 0


def _cmd_verify(args) -> int:
    results = run_verification(printer=print)
    failed = [r for r in results if not r.passed]
    if failed:
        print(f"FAILED {len(failed)}/{len(results)} checks: "
              + ", ".join(r.name for r in failed))
        return 1
    print(f"all {len(results)} invariant checks passed")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tapertpa",
        description="Two-photon absorption rates for counter-propagating beams "
        "in a subwavelength tapered fiber surrounded by an atomic vapor.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, needs_output=False):
        p.add_argument("--config", type=str, default=None, help="scenario config file")
        p.add_argument("--threads", type=int, default=1,
                       help="worker threads for sweeps (TAPER_TPA_THREADS overrides)")
        if needs_output:
            p.add_argument("--output", type=str, required=True, help="output CSV path")

    p_mode = sub.add_parser("mode", help="solve the fundamental mode")
    add_common(p_mode)
    p_mode.add_argument("--wavelength-nm", type=float, default=None)
    p_mode.add_argument("--diameter-nm", type=float, default=None)
    p_mode.add_argument("--n-clad", type=float, default=1.0)
    p_mode.set_defaults(handler=_cmd_mode)

    p_prof = sub.add_parser("profile", help="write the field profile CSV")
    add_common(p_prof, needs_output=True)
    p_prof.add_argument("--wavelength-nm", type=float, default=None)
    p_prof.add_argument("--diameter-nm", type=float, default=None)
    p_prof.add_argument("--n-clad", type=float, default=1.0)
    p_prof.add_argument("--rmax-factor", type=float, default=3.0)
    p_prof.add_argument("--nr", type=int, default=121)
    p_prof.add_argument("--nphi", type=int, default=16)
    p_prof.set_defaults(handler=_cmd_profile)

    p_rate = sub.add_parser("rate", help="total rate and fractional absorption")
    add_common(p_rate)
    p_rate.set_defaults(handler=_cmd_rate)

    p_swd = sub.add_parser("sweep-diameter", help="rate vs. taper diameter")
    add_common(p_swd, needs_output=True)
    p_swd.add_argument("--dmin-nm", type=float, required=True)
    p_swd.add_argument("--dmax-nm", type=float, required=True)
    p_swd.add_argument("--step-nm", type=float, required=True)
    p_swd.set_defaults(handler=_cmd_sweep_diameter)

    p_swdet = sub.add_parser("sweep-detuning", help="two-color absorption vs. detuning")
    add_common(p_swdet, needs_output=True)
    p_swdet.add_argument("--delta-min", type=float, required=True)
    p_swdet.add_argument("--delta-max", type=float, required=True)
    p_swdet.add_argument("--points", type=int, required=True)
    p_swdet.add_argument("--delta-unit", choices=("hz", "rad"), default="rad")
    p_swdet.add_argument("--spacing", choices=("linear", "log"), default="log")
    p_swdet.set_defaults(handler=_cmd_sweep_detuning)

    p_dyn = sub.add_parser("dynamics", help="atom-photon dynamics CSV at the core surface")
    add_common(p_dyn, needs_output=True)
    p_dyn.add_argument("--tmax-s", type=float, default=None)
    p_dyn.add_argument("--samples", type=int, default=200)
    p_dyn.set_defaults(handler=_cmd_dynamics)

    p_ver = sub.add_parser("verify", help="run the full invariant suite")
    add_common(p_ver)
    p_ver.set_defaults(handler=_cmd_verify)

    return parser


def run_subcommand(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.handler(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except TaperTpaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        # precondition violations reaching the CLI are usage errors
        print(f"invalid value: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_subcommand())


if __name__ == "__main__":
    main()
