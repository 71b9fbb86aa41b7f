"""Named, desk-scale reproductions of the standard experiments.

Every preset writes CSV files into ``out_dir`` and returns a PresetResult
whose ``summary`` holds the headline numbers. Scale knobs (network, replicas,
seasons) come from PresetOptions so the same preset runs on a 100-node toy
graph or on Wiki-Vote.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np
import pandas as pd

from experiments.config import DESK_NETWORK, ExperimentConfig, load_network
from experiments.ensemble import run_ensemble
from experiments.report import emit_csv, meanfield_frame, write_frame
from experiments.threshold import estimates_frame, sweep_coverage, threshold_curve
from immunization.seasons import STRATEGY_IDS
from meanfield.solver import run_meanfield_seasons
from network.structure import DegreeDistribution
from utils.errors import ParameterError

logger = logging.getLogger(__name__)

CURVE_CLASSES = (2, 20)
CURVE_SEASONS = (1, 5)
SWEEP_BETAS = (0.10, 0.05, 0.02)
SWEEP_V_GRID = tuple(np.round(np.arange(0.0, 1.0, 0.1), 2))
THRESHOLD_BETAS = (0.02, 0.05, 0.10, 0.15, 0.20)
TOY_NETWORK = "ba:n=100,m=2,seed=1"


@dataclass(frozen=True)
class PresetOptions:
    network: str | None = None
    replicas: int | None = None
    seasons: int | None = None
    seed: int = 0
    workers: int = 1
    out_dir: str = "results"
    progress: bool = False
    i0: float | None = None


@dataclass
class PresetResult:
    name: str
    files: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)


def _config(options, network, replicas, seasons, **fields):
    return ExperimentConfig(
        network=options.network or network,
        replicas=options.replicas or replicas,
        seasons=options.seasons or seasons,
        seed=options.seed,
        workers=options.workers,
        i0=options.i0,
        **fields,
    ).validate()


def _out(options, filename):
    return Path(options.out_dir) / filename


def _curve_classes(dist):
    present = [k for k in CURVE_CLASSES if k in set(dist.degrees.tolist())]
    if len(present) == len(CURVE_CLASSES):
        return present
    return sorted({int(dist.degrees[0]), int(dist.degrees[-1])})


def theory_vs_simulation(options):
    """Monte Carlo vs mean-field r_inf per season for the dynamical strategy."""
    config = _config(options, TOY_NETWORK, 100, 10, strategy="dynamical", beta=0.1, v=0.1)
    net = load_network(config.network)
    i0 = config.i0 if config.i0 is not None else 1.0 / net.node_count
    report = run_ensemble(config, net=net, progress=options.progress)

    dist = DegreeDistribution.from_network(net)
    classes = _curve_classes(dist)
    series = run_meanfield_seasons(dist, config.beta, config.v, i0, config.seasons, record_classes=classes)

    frame = meanfield_frame(report, series)
    result = PresetResult("theory-vs-simulation")
    result.files.append(write_frame(frame, _out(options, "theory_vs_simulation.csv")))

    curves = []
    for season in CURVE_SEASONS:
        if season > config.seasons:
            continue
        solution = series.solutions[season - 1]
        for k, values in solution.class_curves.items():
            curves.append(pd.DataFrame({"season": season, "k": k, "t": solution.times, "r_k": values}))
    if curves:
        result.files.append(write_frame(pd.concat(curves, ignore_index=True), _out(options, "class_curves.csv")))

    result.summary = {
        "max_abs_gap": float(np.max(np.abs(report.r_mean - series.prevalences))),
        "sim_final": float(report.r_mean[-1]),
        "meanfield_final": float(series.prevalences[-1]),
    }
    return result


def strategy_comparison(options):
    """One ensemble per strategy on the same graph and master seed."""
    base = _config(options, DESK_NETWORK, 100, 10, beta=0.1, v=0.1)
    net = load_network(base.network)
    result = PresetResult("strategy-comparison")
    for strategy in STRATEGY_IDS:
        report = run_ensemble(replace(base, strategy=strategy), net=net, progress=options.progress)
        result.files += emit_csv(report, _out(options, f"strategy_{strategy}.csv"))
        mean, stderr = report.final_prevalence()
        result.summary[strategy] = {"r_inf_mean": mean, "r_inf_stderr": stderr}
    return result


def recurrence_run(options):
    """Dynamical strategy with Q1/Q2 per season and the A/F sidecar."""
    config = _config(options, DESK_NETWORK, 100, 10, strategy="dynamical", beta=0.1, v=0.1)
    report = run_ensemble(config, progress=options.progress)
    files = emit_csv(report, _out(options, "recurrence.csv"))
    q1 = report.q1_mean
    return PresetResult("recurrence", files, {
        "q1_first": float(q1[1]) if len(q1) > 1 else None,
        "q1_last": float(q1[-1]) if len(q1) > 1 else None,
        "a_streak": report.a_mean,
        "f_repeat": report.f_mean,
    })


def vaccinated_structure(options):
    """Degree, k-shell and mutual distance of the vaccinated set across seasons."""
    config = _config(options, DESK_NETWORK, 20, 10, strategy="dynamical", beta=0.1, v=0.1,
                     profile=True)
    report = run_ensemble(config, progress=options.progress)
    files = emit_csv(report, _out(options, "vaccinated_structure.csv"))
    baseline = report.baseline
    return PresetResult("vaccinated-structure", files, {
        "network_mean_degree": baseline.mean_degree,
        "network_mean_kshell": baseline.mean_kshell,
        "network_mean_distance": baseline.mean_distance,
        "final_vacc_mean_degree": float(report.profile_mean[-1, 0]),
    })


def threshold_run(options):
    """v_c against beta for the uniform and dynamical strategies."""
    config = _config(options, DESK_NETWORK, 20, 5, beta=0.1, v=0.0)
    net = load_network(config.network)
    estimates = []
    for strategy in ("uniform", "dynamical"):
        estimates += threshold_curve(net, strategy, THRESHOLD_BETAS, seasons=config.seasons,
                                     replicas=config.replicas, tolerance=0.01, seed=config.seed,
                                     workers=config.workers)
    frame = estimates_frame(estimates)
    files = [write_frame(frame, _out(options, "threshold_curve.csv"))]
    summary = {f"{e.strategy}@{e.beta:g}": e.v_c for e in estimates}
    return PresetResult("threshold-curve", files, summary)


def coverage_run(options):
    """r_inf at the last season as v grows, for several beta."""
    config = _config(options, DESK_NETWORK, 20, 5, strategy="dynamical", beta=0.1, v=0.0)
    net = load_network(config.network)
    frames = [
        sweep_coverage(net, config.strategy, beta, SWEEP_V_GRID, seasons=config.seasons,
                       replicas=config.replicas, seed=config.seed, workers=config.workers)
        for beta in SWEEP_BETAS
    ]
    frame = pd.concat(frames, ignore_index=True)
    files = [write_frame(frame, _out(options, "coverage_sweep.csv"))]
    return PresetResult("coverage-sweep", files, {"points": len(frame)})


PRESETS = {
    "theory-vs-simulation": theory_vs_simulation,
    "strategy-comparison": strategy_comparison,
    "recurrence": recurrence_run,
    "vaccinated-structure": vaccinated_structure,
    "threshold-curve": threshold_run,
    "coverage-sweep": coverage_run,
}


def run_preset(name, options=None):
    options = options or PresetOptions()
    try:
        preset = PRESETS[name]
    except KeyError:
        raise ParameterError(f"unknown preset {name!r}; expected one of {', '.join(PRESETS)}") from None
    logger.info("Running preset %s into %s", name, options.out_dir)
    return preset(options)
