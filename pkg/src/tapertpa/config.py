"""Flat key-value scenario configuration files.

Format: one ``key = value`` per line, ``#`` starts a comment, blank lines
ignored. Unknown and duplicate keys are hard errors (they usually mean a
typo), as are out-of-range values; errors name the key and line number.

Lengths are given in the units embedded in the key names (nm, mm), vapor
density in cm^-3, the detuning in the unit selected by ``detuning_unit``
(``hz`` is an ordinary frequency and gets multiplied by 2*pi, ``rad``
is already an angular frequency in rad/s).
"""

from __future__ import annotations

import math
from dataclasses import MISSING, dataclass, fields

from .constants import BeamSpec, dipole_from_radius
from .dynamics import AtomParams
from .engine import ORIENTATION_FACTORS, TpaScenario


class ConfigError(ValueError):
    """Malformed or invalid scenario configuration."""


@dataclass
class ScenarioConfig:
    """Raw configuration values, in file units."""

    wavelength_nm: float
    diameter_nm: float
    length_mm: float
    power_w: float
    density_per_cm3: float
    gamma1_per_s: float
    gamma2_per_s: float
    detuning: float
    detuning_unit: str
    r1_nm: float
    r2_nm: float
    wavelength_b_nm: float | None = None
    power_b_w: float | None = None
    n_clad: float = 1.0
    orientation_averaging: str = "none"
    quadrature_rel_tol: float = 1e-8


_FIELDS = {f.name: f for f in fields(ScenarioConfig)}
_REQUIRED = [f.name for f in fields(ScenarioConfig) if f.default is MISSING]
_STRING_KEYS = {"detuning_unit", "orientation_averaging"}

# (minimum, strict) bounds for numeric keys; None = no lower bound
_RANGES = {
    "wavelength_nm": (0.0, True),
    "diameter_nm": (0.0, True),
    "length_mm": (0.0, True),
    "power_w": (0.0, False),
    "density_per_cm3": (0.0, False),
    "gamma1_per_s": (0.0, True),
    "gamma2_per_s": (0.0, True),
    "r1_nm": (0.0, True),
    "r2_nm": (0.0, True),
    "wavelength_b_nm": (0.0, True),
    "power_b_w": (0.0, False),
    "n_clad": (1.0, False),
    "quadrature_rel_tol": (0.0, True),
}

DETUNING_UNITS = ("hz", "rad")


def _check_range(key: str, value: float, line_no: int) -> None:
    bound = _RANGES.get(key)
    if bound is None:
        return
    lo, strict = bound
    if (value <= lo) if strict else (value < lo):
        op = ">" if strict else ">="
        raise ConfigError(f"line {line_no}: {key} must be {op} {lo:g}, got {value:g}")


def parse_config(text) -> ScenarioConfig:
    """Parse and validate configuration text (str or UTF-8 bytes)."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    values: dict[str, object] = {}
    for line_no, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {line_no}: expected 'key = value', got {raw!r}")
        key, _, val = (part.strip() for part in line.partition("="))
        if key not in _FIELDS:
            raise ConfigError(f"line {line_no}: unknown key {key!r}")
        if key in values:
            raise ConfigError(f"line {line_no}: duplicate key {key!r}")
        if key in _STRING_KEYS:
            values[key] = val
        else:
            try:
                parsed = float(val)
            except ValueError:
                raise ConfigError(
                    f"line {line_no}: cannot parse value for {key!r}: {val!r}"
                ) from None
            if not math.isfinite(parsed):
                raise ConfigError(f"line {line_no}: {key} must be finite, got {val!r}")
            _check_range(key, parsed, line_no)
            values[key] = parsed

    missing = [k for k in _REQUIRED if k not in values]
    if missing:
        raise ConfigError(f"missing required keys: {', '.join(missing)}")

    if values.get("detuning_unit") not in DETUNING_UNITS:
        raise ConfigError(
            f"detuning_unit must be one of {DETUNING_UNITS}, got {values.get('detuning_unit')!r}"
        )
    orientation = values.get("orientation_averaging", "none")
    if orientation not in ORIENTATION_FACTORS:
        raise ConfigError(
            f"orientation_averaging must be one of {sorted(ORIENTATION_FACTORS)}, "
            f"got {orientation!r}"
        )
    return ScenarioConfig(**values)  # type: ignore[arg-type]


def _format_value(v) -> str:
    if isinstance(v, str):
        return v
    return format(float(v), ".12g")


def serialize_config(cfg: ScenarioConfig) -> str:
    """Canonical text form; parse(serialize(parse(s))) == parse(s)."""
    lines = []
    for f in fields(ScenarioConfig):
        v = getattr(cfg, f.name)
        if v is None:
            continue
        lines.append(f"{f.name} = {_format_value(v)}")
    return "\n".join(lines) + "\n"


def detuning_rad_per_s(cfg: ScenarioConfig) -> float:
    if cfg.detuning_unit == "hz":
        return 2.0 * math.pi * cfg.detuning
    return cfg.detuning


def scenario_from_config(cfg: ScenarioConfig) -> TpaScenario:
    """Build the SI scenario; degenerate beam b defaults mirror beam a."""
    lam_a = cfg.wavelength_nm * 1e-9
    lam_b = lam_a if cfg.wavelength_b_nm is None else cfg.wavelength_b_nm * 1e-9
    power_b = cfg.power_w if cfg.power_b_w is None else cfg.power_b_w
    try:
        beam_a = BeamSpec(lam_a, cfg.power_w, +1)
        beam_b = BeamSpec(lam_b, power_b, -1)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    atom = AtomParams(
        d1=dipole_from_radius(cfg.r1_nm * 1e-9),
        d2=dipole_from_radius(cfg.r2_nm * 1e-9),
        gamma1=cfg.gamma1_per_s,
        gamma2=cfg.gamma2_per_s,
        delta=detuning_rad_per_s(cfg),
    )
    return TpaScenario(
        diameter=cfg.diameter_nm * 1e-9,
        taper_length=cfg.length_mm * 1e-3,
        density=cfg.density_per_cm3 * 1e6,
        beam_a=beam_a,
        beam_b=beam_b,
        atom=atom,
        n_clad=cfg.n_clad,
        orientation_averaging=cfg.orientation_averaging,
        quadrature_rel_tol=cfg.quadrature_rel_tol,
    )


def load_config(path) -> ScenarioConfig:
    with open(path, "rb") as fh:
        return parse_config(fh.read())
