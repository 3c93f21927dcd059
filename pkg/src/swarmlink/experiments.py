"""Seeded Monte Carlo sweeps over swarm spacing and transmit power.

Reproducibility protocol: every (grid point, trial) pair owns an
independent random stream derived from the master seed, so results are
identical for any worker count and scheduling order.  Within one trial the
draw order is fixed: first the per-satellite channel phases, then the
per-satellite angle errors (x before y).  Precoders see only estimated
angles and error statistics; rates are always evaluated on the true
channel.  Geometry is fixed per grid point; aggregation uses exactly
rounded summation in trial order.
"""

from __future__ import annotations

import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import channel as ch
from . import geometry as geom
from . import precoding, rates, stats
from .config import ExperimentConfig
from .linalg import NumericalError

_SCHEME_ORDER = ("capacity", "robust", "heuristic", "perfect")

CSV_HEADER = "grid_value,scheme,mean_rate_bps_hz,stderr,trials"


def trial_seed(master_seed: int, trial_index: int, grid_index: int) -> int:
    """Derive the 128-bit seed of one (grid point, trial) random stream.

    Deterministic and collision-free in practice: the triple is hashed
    through numpy's SeedSequence spawn mechanism, independent of execution
    order.
    """
    if trial_index < 0 or grid_index < 0:
        raise ValueError("indices must be >= 0")
    ss = np.random.SeedSequence(master_seed, spawn_key=(grid_index, trial_index))
    high, low = ss.generate_state(2, np.uint64)
    return (int(high) << 64) | int(low)


@dataclass(frozen=True)
class SweepResult:
    """Aggregated sweep output: one (mean, stderr) per grid value and scheme."""

    grid_values: tuple[float, ...]
    schemes: tuple[str, ...]
    mean_rates: np.ndarray
    stderrs: np.ndarray
    trials: int

    def csv_text(self) -> str:
        """Render the result as CSV with 12 significant digits."""
        out = io.StringIO()
        out.write(CSV_HEADER + "\n")
        for gi, value in enumerate(self.grid_values):
            for si, scheme in enumerate(self.schemes):
                out.write(
                    "%.12g,%s,%.12g,%.12g,%d\n"
                    % (
                        value,
                        scheme,
                        self.mean_rates[gi, si],
                        self.stderrs[gi, si],
                        self.trials,
                    )
                )
        return out.getvalue()

    def write_csv(self, path: str) -> None:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(self.csv_text())

    def rates_for(self, scheme: str) -> np.ndarray:
        """Mean-rate column of one scheme."""
        return self.mean_rates[:, self.schemes.index(scheme)]

    def stderr_for(self, scheme: str) -> np.ndarray:
        return self.stderrs[:, self.schemes.index(scheme)]


@dataclass(frozen=True)
class _Scene:
    """Deterministic per-grid-point state shared by all trials."""

    true_angles: tuple[geom.SpaceAngles, ...]
    steering: tuple[np.ndarray, ...]
    gain_variances: tuple[float, ...]


def _build_scene(cfg: ExperimentConfig, inter_sat_distance: float) -> _Scene:
    swarm = geom.triangle_swarm(
        centroid_elevation=cfg.centroid_elevation,
        centroid_azimuth=cfg.centroid_azimuth,
        altitude=cfg.altitude,
        inter_sat_distance=inter_sat_distance,
        min_elevation=cfg.min_elevation,
    )
    ura = cfg.ura()
    budget = cfg.link_budget()
    angles = tuple(swarm.space_angles())
    return _Scene(
        true_angles=angles,
        steering=tuple(ch.steering_vector(ura, a) for a in angles),
        gain_variances=tuple(
            ch.channel_gain_variance(p.distance, ura, budget) for p in swarm.positions
        ),
    )


def _true_channel(scene: _Scene, rng: np.random.Generator) -> np.ndarray:
    gains = [ch.realize_gain(rng, var) for var in scene.gain_variances]
    return ch.channel_matrix(
        [ch.channel_vector(g, a) for g, a in zip(gains, scene.steering)]
    )


def _distance_task(args) -> tuple[float, ...]:
    cfg, grid_index, trial_index = args
    spacing = cfg.distance_grid[grid_index]
    scene = _build_scene(cfg, spacing)
    rng = np.random.default_rng(trial_seed(cfg.seed, trial_index, grid_index))
    h = _true_channel(scene, rng)
    power = cfg.power_watt(cfg.power_dbw)
    noise = cfg.noise_power
    try:
        cap = rates.capacity(h, power, noise)
        g = precoding.perfect_csi_precoder(
            np.column_stack(scene.steering),
            np.array(scene.gain_variances),
            noise,
            power,
        )
        rate = rates.sum_rate(rates.sinr(h, g, noise))
    except NumericalError as exc:
        raise NumericalError(
            f"distance sweep failed at grid index {grid_index} "
            f"(spacing {spacing:.6g} m), trial {trial_index}: {exc}"
        ) from exc
    return (cap, rate)


def _power_task(args) -> tuple[float, ...]:
    cfg, grid_index, trial_index = args
    power_dbw = cfg.power_grid_dbw[grid_index]
    power = cfg.power_watt(power_dbw)
    noise = cfg.noise_power
    scene = _build_scene(cfg, cfg.inter_sat_distance)
    ura = cfg.ura()
    error_model = cfg.error_model()
    gain_variances = np.array(scene.gain_variances)

    rng = np.random.default_rng(trial_seed(cfg.seed, trial_index, grid_index))
    h = _true_channel(scene, rng)
    estimated = [
        ch.perturb_angles(rng, a, error_model) for a in scene.true_angles
    ]

    schemes = _power_schemes(cfg)
    values = []
    try:
        for scheme in schemes:
            if scheme == "capacity":
                values.append(rates.capacity(h, power, noise))
                continue
            if scheme == "robust":
                axis = [
                    stats.axis_autocorrelations(ura, est, error_model)
                    for est in estimated
                ]
                g = precoding.robust_precoder_kron(
                    axis, gain_variances, noise, power
                )
            elif scheme == "heuristic":
                est_steering = np.column_stack(
                    [ch.steering_vector(ura, est) for est in estimated]
                )
                g = precoding.heuristic_precoder(
                    est_steering, gain_variances, noise, power
                )
            else:  # perfect
                g = precoding.perfect_csi_precoder(
                    np.column_stack(scene.steering), gain_variances, noise, power
                )
            values.append(rates.sum_rate(rates.sinr(h, g, noise)))
    except NumericalError as exc:
        raise NumericalError(
            f"power sweep failed at grid index {grid_index} "
            f"({power_dbw:.6g} dBW), trial {trial_index}: {exc}"
        ) from exc
    return tuple(values)


def _power_schemes(cfg: ExperimentConfig) -> tuple[str, ...]:
    return tuple(s for s in _SCHEME_ORDER if s in cfg.precoders)


def _run_tasks(task_fn, cfg, n_grid: int, workers: int) -> np.ndarray:
    tasks = [
        (cfg, grid_index, trial_index)
        for grid_index in range(n_grid)
        for trial_index in range(cfg.trials)
    ]
    if workers <= 1:
        flat = [task_fn(t) for t in tasks]
    else:
        chunksize = max(1, len(tasks) // (workers * 8))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            flat = list(pool.map(task_fn, tasks, chunksize=chunksize))
    n_schemes = len(flat[0])
    samples = np.array(flat, dtype=float).reshape(n_grid, cfg.trials, n_schemes)
    return samples


def _aggregate(
    grid_values, schemes, samples: np.ndarray, trials: int
) -> SweepResult:
    n_grid, _, n_schemes = samples.shape
    means = np.empty((n_grid, n_schemes))
    errs = np.empty((n_grid, n_schemes))
    for gi in range(n_grid):
        for si in range(n_schemes):
            xs = samples[gi, :, si].tolist()
            mean = math.fsum(xs) / trials
            if trials > 1:
                var = math.fsum((x - mean) ** 2 for x in xs) / (trials - 1)
            else:
                var = 0.0
            means[gi, si] = mean
            errs[gi, si] = math.sqrt(var / trials)
    return SweepResult(
        grid_values=tuple(float(v) for v in grid_values),
        schemes=tuple(schemes),
        mean_rates=means,
        stderrs=errs,
        trials=trials,
    )


def run_distance_sweep(cfg: ExperimentConfig, workers: int = 1) -> SweepResult:
    """Mean capacity and perfect-CSI sum rate over the swarm-spacing grid.

    Position knowledge is perfect by construction here; the configured
    error model is ignored.  Randomness per trial is limited to the
    channel phases.
    """
    cfg.validate()
    samples = _run_tasks(_distance_task, cfg, len(cfg.distance_grid), workers)
    return _aggregate(cfg.distance_grid, ("capacity", "perfect"), samples, cfg.trials)


def run_power_sweep(cfg: ExperimentConfig, workers: int = 1) -> SweepResult:
    """Mean sum rate of the selected precoders over the transmit-power grid.

    Per trial, fresh channel phases and angle errors are drawn; precoders
    are built from the estimated angles (and, for the robust scheme, the
    error statistics), then scored on the true channel.
    """
    cfg.validate()
    samples = _run_tasks(_power_task, cfg, len(cfg.power_grid_dbw), workers)
    return _aggregate(cfg.power_grid_dbw, _power_schemes(cfg), samples, cfg.trials)


def precoder_demo(cfg: ExperimentConfig) -> str:
    """One-shot precoder report: column norms plus SLNR/SINR breakdown."""
    cfg.validate()
    scene = _build_scene(cfg, cfg.inter_sat_distance)
    ura = cfg.ura()
    error_model = cfg.error_model()
    power = cfg.power_watt(cfg.power_dbw)
    noise = cfg.noise_power
    gain_variances = np.array(scene.gain_variances)

    rng = np.random.default_rng(trial_seed(cfg.seed, 0, 0))
    h = _true_channel(scene, rng)
    estimated = [ch.perturb_angles(rng, a, error_model) for a in scene.true_angles]

    correlations = np.stack(
        [stats.steering_autocorrelation(ura, est, error_model) for est in estimated]
    )
    problem = precoding.SlnrProblem(
        correlations=correlations,
        gain_variances=gain_variances,
        noise_power=noise,
        total_power=power,
    )
    g = precoding.robust_precoder(problem)
    gammas = rates.sinr(h, g, noise)

    lines = []
    lines.append(
        "robust precoder: %d antennas, %d satellites, %.6g W budget"
        % (ura.n_antennas, problem.n_satellites, power)
    )
    if ura.n_antennas <= 16:
        lines.append("columns (satellites across):")
        for row in g:
            lines.append("  " + "  ".join("%+.4f%+.4fj" % (v.real, v.imag) for v in row))
    for sat in range(problem.n_satellites):
        lines.append(
            "satellite %d: |g|^2 = %.6g W, mean SLNR = %.4f dB, SINR = %.4f dB"
            % (
                sat,
                float(np.linalg.norm(g[:, sat]) ** 2),
                10.0 * math.log10(precoding.mean_slnr(g[:, sat], problem, sat)),
                10.0 * math.log10(gammas[sat]),
            )
        )
    lines.append(
        "sum rate %.6g bits/channel use, capacity %.6g bits/channel use"
        % (rates.sum_rate(gammas), rates.capacity(h, power, noise))
    )
    return "\n".join(lines)
