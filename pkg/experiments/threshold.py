"""Monte Carlo immunization threshold and coverage sweeps."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

import pandas as pd

from experiments.config import ExperimentConfig
from experiments.ensemble import run_ensemble
from utils.errors import ParameterError

logger = logging.getLogger(__name__)

CRITERION = 0.005
CEILING = 0.99


@dataclass(frozen=True)
class ThresholdEstimate:
    """Bisection result; ``v_c`` is the smallest evaluated v meeting the criterion.

    ``lower`` failed the criterion (or is 0 when v = 0 already meets it) and
    ``upper`` met it. A saturated estimate never met it: ``v_c`` and
    ``upper`` are None and ``lower`` is the ceiling.
    """

    v_c: float | None
    lower: float
    upper: float | None
    saturated: bool
    strategy: str
    beta: float
    evaluations: tuple = field(default_factory=tuple)

    def as_row(self):
        return {
            "strategy": self.strategy,
            "beta": self.beta,
            "v_c": self.v_c,
            "lower": self.lower,
            "upper": self.upper,
            "saturated": self.saturated,
            "evaluations": len(self.evaluations),
        }


def _season_prevalence(net, strategy, beta, v, seasons, replicas, seed, workers):
    config = ExperimentConfig(network="<in-memory>", strategy=strategy, beta=beta, v=v, seasons=seasons,
                              replicas=replicas, seed=seed, workers=workers)
    report = run_ensemble(config, net=net)
    return float(report.r_mean[seasons - 1]), float(report.r_stderr[seasons - 1])


def estimate_threshold(net, strategy, beta, seasons=5, replicas=50, tolerance=0.01, seed=0,
                       workers=1, ceiling=CEILING, criterion=CRITERION):
    """Bisect v on [0, ceiling] for the smallest v with mean r_inf(seasons) < criterion.

    Every evaluation reuses the same master seed so neighbouring evaluations compare
    like with like.
    """
    if beta < 0 or beta > 1:
        raise ParameterError(f"beta must lie in [0, 1], got {beta}")
    if tolerance <= 0:
        raise ParameterError(f"tolerance must be positive, got {tolerance}")
    if not 0.0 < ceiling < 1.0:
        raise ParameterError(f"ceiling must lie in (0, 1), got {ceiling}")

    evaluations = []

    def meets(v):
        mean, stderr = _season_prevalence(net, strategy, beta, v, seasons, replicas, seed, workers)
        evaluations.append((v, mean, stderr))
        logger.info("%s beta=%g v=%.4f: r_inf(%d)=%.5f", strategy, beta, v, seasons, mean)
        return mean < criterion

    def result(v_c, lower, upper, saturated=False):
        return ThresholdEstimate(v_c, lower, upper, saturated, strategy, beta, tuple(evaluations))

    if meets(0.0):
        return result(0.0, 0.0, 0.0)
    if not meets(ceiling):
        logger.warning("%s beta=%g: criterion unmet at v=%.2f, threshold saturated", strategy, beta, ceiling)
        return result(None, ceiling, None, saturated=True)

    lower, upper = 0.0, ceiling
    while upper - lower > tolerance:
        middle = 0.5 * (lower + upper)
        if meets(middle):
            upper = middle
        else:
            lower = middle
    return result(upper, lower, upper)


def threshold_curve(net, strategy, betas, **kwargs):
    """estimate_threshold over a beta grid; one estimate per beta, in grid order."""
    return [estimate_threshold(net, strategy, float(beta), **kwargs) for beta in betas]


def estimates_frame(estimates):
    return pd.DataFrame([estimate.as_row() for estimate in estimates])


def sweep_coverage(net, strategy, beta, v_grid, seasons=5, replicas=50, seed=0, workers=1):
    """Ensemble mean r_inf at the last season for every v of the grid."""
    rows = []
    for v in v_grid:
        mean, stderr = _season_prevalence(net, strategy, beta, float(v), seasons, replicas, seed, workers)
        rows.append({
            "strategy": strategy,
            "beta": beta,
            "v": float(v),
            "season": seasons,
            "r_inf_mean": mean,
            "r_inf_stderr": stderr,
        })
    return pd.DataFrame(rows, columns=["strategy", "beta", "v", "season", "r_inf_mean", "r_inf_stderr"])
