"""Barrier-function variable-gain super-twisting control.

Controllers (barrier-gain, classic fixed-gain, adaptive competitor), a
scalar disturbed plant with pluggable disturbance models, a deterministic
fixed-step simulation engine, Lyapunov-style diagnostics, and a scenario
benchmark CLI.
"""

from .controllers import (
    ClassicStaParams,
    ShtesselParams,
    ShtesselState,
    StaState,
    barrier_sta_step,
    classic_sta_step,
    shtessel_sta_step,
    signed_power,
    signum,
)
from .diagnostics import (
    LyapunovConstants,
    LyapunovSample,
    Metrics,
    TransformDomainError,
    extract_metrics,
    lyapunov_constants,
    lyapunov_samples,
    lyapunov_value,
    saturation,
    transform,
)
from .engine import (
    IntegrationSettings,
    NumericalBlowup,
    TrajectoryLog,
    euler_step,
    simulate,
)
from .experiments import compare, format_compare_table, read_trajectory_csv, run
from .gains import (
    BarrierDomainError,
    BarrierParams,
    GainState,
    Phase,
    ReachingParams,
    barrier_value,
    gain_step,
    reaching_gain,
)
from .plant import (
    BenchmarkDisturbance,
    DisturbanceModel,
    SinusoidDisturbance,
    delta_dot_eval,
    delta_eval,
    gamma_eval,
    make_disturbance,
    plant_derivative,
)
from .scenario import (
    Scenario,
    ScenarioError,
    load_preset,
    load_scenario,
    parse_scenario,
    preset_names,
    resolve_scenario,
)

__all__ = [
    "BarrierDomainError", "BarrierParams", "BenchmarkDisturbance",
    "ClassicStaParams", "DisturbanceModel", "GainState",
    "IntegrationSettings", "LyapunovConstants", "LyapunovSample", "Metrics",
    "NumericalBlowup", "Phase", "ReachingParams", "Scenario", "ScenarioError",
    "ShtesselParams", "ShtesselState", "SinusoidDisturbance", "StaState",
    "TrajectoryLog", "TransformDomainError",
    "barrier_sta_step", "barrier_value", "classic_sta_step", "compare",
    "delta_dot_eval", "delta_eval", "euler_step", "extract_metrics",
    "format_compare_table", "gain_step", "gamma_eval", "load_preset",
    "load_scenario", "lyapunov_constants", "lyapunov_samples",
    "lyapunov_value", "make_disturbance", "parse_scenario",
    "plant_derivative", "preset_names", "read_trajectory_csv",
    "reaching_gain", "resolve_scenario", "run", "saturation",
    "shtessel_sta_step", "signed_power", "signum", "simulate", "transform",
]
