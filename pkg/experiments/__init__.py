from experiments.config import ExperimentConfig, load_network, parse_generator_spec
from experiments.ensemble import EnsembleReport, ReplicaSummary, run_ensemble
from experiments.presets import PRESETS, PresetOptions, PresetResult, run_preset
from experiments.report import COLUMNS, emit_csv, read_report_csv
from experiments.threshold import CRITERION, ThresholdEstimate, estimate_threshold, sweep_coverage, threshold_curve

__all__ = [
    "COLUMNS",
    "CRITERION",
    "EnsembleReport",
    "ExperimentConfig",
    "PRESETS",
    "PresetOptions",
    "PresetResult",
    "ReplicaSummary",
    "ThresholdEstimate",
    "emit_csv",
    "estimate_threshold",
    "load_network",
    "parse_generator_spec",
    "read_report_csv",
    "run_ensemble",
    "run_preset",
    "sweep_coverage",
    "threshold_curve",
]
