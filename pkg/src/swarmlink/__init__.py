"""Robust SLNR precoding and rate benchmarks for uplinks to satellite swarms."""

from .channel import (
    LinkBudget,
    UraConfig,
    channel_gain_variance,
    channel_matrix,
    channel_vector,
    perturb_angles,
    realize_gain,
    steering_vector,
)
from .config import ConfigError, ExperimentConfig, load_config
from .experiments import (
    SweepResult,
    run_distance_sweep,
    run_power_sweep,
    trial_seed,
)
from .geometry import (
    SatellitePosition,
    SpaceAngles,
    SwarmGeometry,
    slant_range,
    space_angles,
    triangle_swarm,
)
from .linalg import NotPositiveDefiniteError, NumericalError
from .precoding import (
    SlnrProblem,
    heuristic_precoder,
    mean_slnr,
    perfect_csi_precoder,
    principal_generalized_eigenpair,
    robust_precoder,
    robust_precoder_kron,
)
from .rates import (
    PowerAllocation,
    RateReport,
    capacity,
    rate_report,
    sinr,
    sum_rate,
    waterfill,
)
from .stats import (
    AngleErrorModel,
    GaussianError,
    NoError,
    UniformError,
    cf_gauss,
    cf_uniform,
    steering_autocorrelation,
)

__version__ = "0.1.0"
