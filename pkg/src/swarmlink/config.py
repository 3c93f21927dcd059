"""Experiment configuration: defaults, INI-style files, validation.

A config file holds flat ``key = value`` entries grouped into sections::

    [array]
    nx = 32                    # antennas along x
    ny = 32                    # antennas along y
    spacing_m = 0.025          # element spacing
    carrier_hz = 30e9          # carrier frequency

    [swarm]
    altitude_m = 600e3             # orbit altitude
    centroid_elevation_deg = 90    # swarm centroid direction
    centroid_azimuth_deg = 0
    min_elevation_deg = 30         # lowest admissible centroid elevation
    distance_m = 40e3              # inter-satellite distance (power sweep)
    distance_grid_m = logspace(1e3, 200e3, 25)   # grid (distance sweep)

    [link]
    tx_gain_dbi = 13.0969      # per-element transmit gain
    rx_gain_dbi = 25.7288      # satellite receive gain
    noise_dbw = -120           # receiver noise power

    [error]
    model = uniform            # none | uniform | gaussian
    max_offset = 0.01          # uniform half-width (space-angle units)
    std = 0.005773502691896258 # gaussian standard deviation

    [sweep]
    power_dbw = 5                          # fixed power (distance sweep)
    power_grid_dbw = -10, -5, 0, 5, 10, 15 # grid (power sweep)
    precoders = robust, heuristic, capacity
    trials = 500
    seed = 12345

Grids accept a comma-separated list, ``linspace(start, stop, num)`` or
``logspace(start, stop, num)`` (start/stop are plain values, not decades).
Unknown sections or keys are errors.  All values are SI except the
explicitly suffixed dB quantities and degree-valued angles.
"""

from __future__ import annotations

import configparser
import math
import re
from dataclasses import dataclass, replace

import numpy as np

from .channel import LinkBudget, UraConfig
from .stats import AngleErrorModel, GaussianError, NoError, UniformError

PRECODER_SCHEMES = ("robust", "heuristic", "perfect", "capacity")

_DEFAULT_MAX_OFFSET = 0.01  # non-paper default; see README


class ConfigError(ValueError):
    """Invalid configuration file or parameter set."""


@dataclass(frozen=True)
class ExperimentConfig:
    """Complete parameter set of one Monte Carlo sweep."""

    # array
    n_x: int = 32
    n_y: int = 32
    antenna_spacing: float = 0.025
    carrier_frequency: float = 30e9
    # swarm
    altitude: float = 600e3
    centroid_elevation_deg: float = 90.0
    centroid_azimuth_deg: float = 0.0
    min_elevation_deg: float = 30.0
    inter_sat_distance: float = 40e3
    distance_grid: tuple[float, ...] = tuple(
        np.logspace(math.log10(1e3), math.log10(200e3), 25)
    )
    # link
    tx_gain_dbi: float = 43.2 - 10.0 * math.log10(1024)  # 43.2 dBi aperture over 32x32
    rx_gain_dbi: float = 30.5 - 10.0 * math.log10(3)  # 30.5 dBi split over 3 satellites
    noise_dbw: float = -120.0
    # error
    error_model_name: str = "uniform"
    max_offset: float = _DEFAULT_MAX_OFFSET
    std: float = _DEFAULT_MAX_OFFSET / math.sqrt(3.0)
    # sweep
    power_dbw: float = 5.0
    power_grid_dbw: tuple[float, ...] = (-10.0, -5.0, 0.0, 5.0, 10.0, 15.0)
    precoders: tuple[str, ...] = ("robust", "heuristic", "capacity")
    trials: int = 500
    seed: int = 12345

    def validate(self) -> None:
        if self.n_x < 1 or self.n_y < 1:
            raise ConfigError("antenna counts must be >= 1")
        if self.antenna_spacing <= 0 or self.carrier_frequency <= 0:
            raise ConfigError("spacing and carrier frequency must be > 0")
        if self.altitude <= 0:
            raise ConfigError("altitude must be > 0")
        if not 0.0 <= self.min_elevation_deg <= 90.0:
            raise ConfigError("min_elevation_deg must lie in [0, 90]")
        if not self.min_elevation_deg <= self.centroid_elevation_deg <= 90.0:
            raise ConfigError(
                "centroid_elevation_deg must lie in [min_elevation_deg, 90]"
            )
        if self.inter_sat_distance < 0:
            raise ConfigError("distance_m must be >= 0")
        for name, grid in (
            ("distance_grid_m", self.distance_grid),
            ("power_grid_dbw", self.power_grid_dbw),
        ):
            if len(grid) == 0:
                raise ConfigError(f"{name} must not be empty")
            if any(b <= a for a, b in zip(grid, grid[1:])):
                raise ConfigError(f"{name} must be strictly increasing")
        if any(d <= 0 for d in self.distance_grid):
            raise ConfigError("distance_grid_m values must be > 0")
        if self.error_model_name not in ("none", "uniform", "gaussian"):
            raise ConfigError(f"unknown error model '{self.error_model_name}'")
        if self.max_offset <= 0 or self.std <= 0:
            raise ConfigError("error parameters must be > 0")
        if len(self.precoders) == 0:
            raise ConfigError("precoders must not be empty")
        for scheme in self.precoders:
            if scheme not in PRECODER_SCHEMES:
                raise ConfigError(
                    f"unknown precoder '{scheme}'; choose from {PRECODER_SCHEMES}"
                )
        if self.trials < 1:
            raise ConfigError("trials must be >= 1")
        if self.seed < 0:
            raise ConfigError("seed must be >= 0")

    # -- derived views ----------------------------------------------------

    def ura(self) -> UraConfig:
        return UraConfig(
            n_x=self.n_x,
            n_y=self.n_y,
            antenna_spacing=self.antenna_spacing,
            carrier_frequency=self.carrier_frequency,
        )

    @property
    def noise_power(self) -> float:
        return 10.0 ** (self.noise_dbw / 10.0)

    def link_budget(self) -> LinkBudget:
        return LinkBudget(
            tx_gain_dbi=self.tx_gain_dbi,
            rx_gain_dbi=self.rx_gain_dbi,
            noise_power=self.noise_power,
        )

    def error_model(self) -> AngleErrorModel:
        if self.error_model_name == "none":
            return NoError()
        if self.error_model_name == "uniform":
            return UniformError(max_offset=self.max_offset)
        return GaussianError(std=self.std)

    @property
    def centroid_elevation(self) -> float:
        return math.radians(self.centroid_elevation_deg)

    @property
    def centroid_azimuth(self) -> float:
        return math.radians(self.centroid_azimuth_deg)

    @property
    def min_elevation(self) -> float:
        return math.radians(self.min_elevation_deg)

    @staticmethod
    def power_watt(power_dbw: float) -> float:
        return 10.0 ** (power_dbw / 10.0)


_GRID_CALL = re.compile(r"^(linspace|logspace)\(([^)]*)\)$")


def parse_grid(text: str) -> tuple[float, ...]:
    """Parse a grid value: comma list, linspace(...) or logspace(...)."""
    text = text.strip()
    call = _GRID_CALL.match(text)
    if call:
        name, argtext = call.groups()
        args = [a.strip() for a in argtext.split(",")]
        if len(args) != 3:
            raise ConfigError(f"{name} needs (start, stop, num), got '{text}'")
        try:
            start, stop = float(args[0]), float(args[1])
            num = int(args[2])
        except ValueError as exc:
            raise ConfigError(f"bad {name} arguments in '{text}'") from exc
        if num < 1:
            raise ConfigError("grid point count must be >= 1")
        if name == "linspace":
            values = np.linspace(start, stop, num)
        else:
            if start <= 0 or stop <= 0:
                raise ConfigError("logspace endpoints must be > 0")
            values = np.logspace(math.log10(start), math.log10(stop), num)
        return tuple(float(v) for v in values)
    try:
        return tuple(float(v) for v in text.split(","))
    except ValueError as exc:
        raise ConfigError(f"cannot parse grid '{text}'") from exc


# section -> key -> (attribute, converter)
_SCHEMA = {
    "array": {
        "nx": ("n_x", int),
        "ny": ("n_y", int),
        "spacing_m": ("antenna_spacing", float),
        "carrier_hz": ("carrier_frequency", float),
    },
    "swarm": {
        "altitude_m": ("altitude", float),
        "centroid_elevation_deg": ("centroid_elevation_deg", float),
        "centroid_azimuth_deg": ("centroid_azimuth_deg", float),
        "min_elevation_deg": ("min_elevation_deg", float),
        "distance_m": ("inter_sat_distance", float),
        "distance_grid_m": ("distance_grid", parse_grid),
    },
    "link": {
        "tx_gain_dbi": ("tx_gain_dbi", float),
        "rx_gain_dbi": ("rx_gain_dbi", float),
        "noise_dbw": ("noise_dbw", float),
    },
    "error": {
        "model": ("error_model_name", lambda s: s.strip().lower()),
        "max_offset": ("max_offset", float),
        "std": ("std", float),
    },
    "sweep": {
        "power_dbw": ("power_dbw", float),
        "power_grid_dbw": ("power_grid_dbw", parse_grid),
        "precoders": (
            "precoders",
            lambda s: tuple(p.strip().lower() for p in s.split(",") if p.strip()),
        ),
        "trials": ("trials", int),
        "seed": ("seed", int),
    },
}


def load_config(path: str) -> ExperimentConfig:
    """Read and validate a config file; unknown sections or keys are errors."""
    parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    try:
        with open(path, "r", encoding="utf-8") as fh:
            parser.read_file(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config file '{path}': {exc}") from exc
    except configparser.Error as exc:
        raise ConfigError(f"malformed config file '{path}': {exc}") from exc

    cfg = ExperimentConfig()
    overrides = {}
    for section in parser.sections():
        if section not in _SCHEMA:
            raise ConfigError(f"unknown config section '[{section}]'")
        for key, raw in parser.items(section):
            if key not in _SCHEMA[section]:
                raise ConfigError(f"unknown key '{key}' in section '[{section}]'")
            attribute, convert = _SCHEMA[section][key]
            try:
                overrides[attribute] = convert(raw)
            except ConfigError:
                raise
            except (TypeError, ValueError) as exc:
                raise ConfigError(
                    f"bad value '{raw}' for '{section}.{key}': {exc}"
                ) from exc
    cfg = replace(cfg, **overrides)
    try:
        cfg.validate()
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    return cfg
