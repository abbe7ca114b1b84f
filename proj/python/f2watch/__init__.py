"""Streaming F2-sketch detector for compromised SDN hosts.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from ._core import (
    AmsSketch,
    ConfigError,
    ConfusionCounts,
    FrequencyVector,
    HeaderRange,
    HostKind,
    HostMonitor,
    HostProfile,
    HostRecord,
    RuntimeResult,
    RuntimeRow,
    SignHash,
    SweepResult,
    SweepRow,
    TrialConfig,
    TrialResult,
    Verdict,
    WindowReport,
    attack_successful,
    classify,
    controller_load,
    default_tau_sweep,
    derive_seed,
    generate_stream,
    load_config,
    measure_runtime,
    run_trial,
    sweep_depth,
    sweep_tau,
    table_misses,
    to_csv,
    trial_csv,
)

__all__ = [
    "AmsSketch",
    "ConfigError",
    "ConfusionCounts",
    "FrequencyVector",
    "HeaderRange",
    "HostKind",
    "HostMonitor",
    "HostProfile",
    "HostRecord",
    "RuntimeResult",
    "RuntimeRow",
    "SignHash",
    "SweepResult",
    "SweepRow",
    "TrialConfig",
    "TrialResult",
    "Verdict",
    "WindowReport",
    "attack_successful",
    "classify",
    "controller_load",
    "default_tau_sweep",
    "derive_seed",
    "generate_stream",
    "load_config",
    "measure_runtime",
    "run_trial",
    "sweep_depth",
    "sweep_tau",
    "table_misses",
    "to_csv",
    "trial_csv",
]
