"""Replicated season runs with a deterministic, order-free reduction."""
from __future__ import annotations

import logging
import multiprocessing as mp
import sys
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field

import numpy as np
from tqdm import tqdm

from experiments.config import load_network
from immunization.seasons import run_seasons
from metrics.recurrence import continuous_streak, recurrence, repeat_frequency
from metrics.structure import network_baseline, vaccinated_profile
from utils.errors import ReplicaError
from utils.rng import replica_rng

logger = logging.getLogger(__name__)

PROFILE_FIELDS = ("mean_degree", "mean_kshell", "mean_distance")


@dataclass(frozen=True, eq=False)
class ReplicaSummary:
    """Per-season numbers of one replica; NaN marks undefined entries."""

    index: int
    prevalences: np.ndarray
    q1: np.ndarray
    q2: np.ndarray
    profiles: np.ndarray
    a_streak: dict = field(default_factory=dict)
    f_repeat: dict = field(default_factory=dict)


@dataclass(frozen=True, eq=False)
class EnsembleReport:
    config: object
    node_count: int
    replicas: int
    r_mean: np.ndarray
    r_stderr: np.ndarray
    q1_mean: np.ndarray
    q2_mean: np.ndarray
    profile_mean: np.ndarray
    a_mean: dict
    a_stderr: dict
    f_mean: dict
    f_stderr: dict
    summaries: tuple = ()
    baseline: object = None

    @property
    def seasons(self):
        return list(range(1, len(self.r_mean) + 1))

    def final_prevalence(self):
        return float(self.r_mean[-1]), float(self.r_stderr[-1])

    @classmethod
    def empty(cls, config, node_count=0):
        nothing = np.empty(0)
        return cls(config, node_count, 0, nothing, nothing, nothing, nothing,
                   np.empty((0, len(PROFILE_FIELDS))), {}, {}, {}, {})


def summarize_history(history, net, index, baseline=None):
    seasons = len(history)
    q1 = np.full(seasons, np.nan)
    q2 = np.full(seasons, np.nan)
    profiles = np.full((seasons, len(PROFILE_FIELDS)), np.nan)
    a_streak, f_repeat = {}, {}

    if history.vaccinated_count > 0:
        if seasons >= 2:
            for s, value in recurrence(history, 1).items():
                q1[s - 1] = value
        if seasons >= 3:
            for s, value in recurrence(history, 2).items():
                q2[s - 1] = value
            a_streak = continuous_streak(history, seasons)
            f_repeat = repeat_frequency(history, seasons)
    if baseline is not None and history.vaccinated_count >= 2:
        for row, record in enumerate(history.records):
            profile = vaccinated_profile(net, record.vaccinated, baseline).vaccinated
            profiles[row] = [getattr(profile, name) for name in PROFILE_FIELDS]

    return ReplicaSummary(index, history.prevalences(), q1, q2, profiles, a_streak, f_repeat)


def run_replica(net, config, index, baseline=None):
    try:
        history = run_seasons(net, config.strategy, config.beta, config.v, config.seasons,
                              rng=replica_rng(config.seed, index), seed=config.seed)
        return summarize_history(history, net, index, baseline)
    except Exception as exc:
        raise ReplicaError(index, exc) from exc


_worker_state = {}


def _init_worker(net, config, baseline):
    _worker_state.update(net=net, config=config, baseline=baseline)


def _run_in_worker(index):
    return run_replica(_worker_state["net"], _worker_state["config"], index, _worker_state["baseline"])


def _column_stats(matrix):
    """Column means and standard errors, NaN where a column has no data."""
    matrix = np.atleast_2d(matrix)
    valid = ~np.isnan(matrix)
    counts = valid.sum(axis=0)
    filled = np.where(valid, matrix, 0.0)
    with np.errstate(invalid="ignore", divide="ignore"):
        mean = filled.sum(axis=0) / counts
        spread = np.where(valid, matrix - mean, 0.0)
        var = (spread ** 2).sum(axis=0) / (counts - 1)
        stderr = np.where(counts > 1, np.sqrt(var / counts), 0.0)
    mean = np.where(counts > 0, mean, np.nan)
    stderr = np.where(counts > 0, stderr, np.nan)
    return mean, stderr


def _dict_stats(dicts):
    keys = sorted({key for d in dicts for key in d})
    if not keys:
        return {}, {}
    matrix = np.array([[d.get(key, np.nan) for key in keys] for d in dicts])
    mean, stderr = _column_stats(matrix)
    return dict(zip(keys, mean.tolist())), dict(zip(keys, stderr.tolist()))


def aggregate(config, node_count, summaries, baseline=None):
    summaries = tuple(sorted(summaries, key=lambda s: s.index))
    if not summaries:
        return EnsembleReport.empty(config, node_count)
    r_mean, r_stderr = _column_stats(np.array([s.prevalences for s in summaries]))
    q1_mean, _ = _column_stats(np.array([s.q1 for s in summaries]))
    q2_mean, _ = _column_stats(np.array([s.q2 for s in summaries]))
    profiles = np.array([s.profiles for s in summaries])
    profile_mean = np.column_stack([_column_stats(profiles[:, :, j])[0] for j in range(profiles.shape[2])])
    a_mean, a_stderr = _dict_stats([s.a_streak for s in summaries])
    f_mean, f_stderr = _dict_stats([s.f_repeat for s in summaries])
    return EnsembleReport(config, node_count, len(summaries), r_mean, r_stderr, q1_mean, q2_mean,
                          profile_mean, a_mean, a_stderr, f_mean, f_stderr, summaries, baseline)


def run_ensemble(config, net=None, progress=False):
    """Run ``config.replicas`` independent season histories and aggregate them.

    Replica ``i`` draws from the stream keyed on (config.seed, i), so results
    do not depend on the worker count or completion order.
    """
    config.validate()
    net = load_network(config.network) if net is None else net
    baseline = network_baseline(net) if config.profile else None
    indices = range(config.replicas)
    show = progress and sys.stderr.isatty()
    logger.info("Ensemble: %s on N=%d, beta=%g, v=%g, %d seasons x %d replicas (%d workers)",
                config.strategy, net.node_count, config.beta, config.v, config.seasons,
                config.replicas, config.workers)

    summaries = []
    if config.workers == 1:
        for index in tqdm(indices, desc=config.strategy, disable=not show):
            summaries.append(run_replica(net, config, index, baseline))
    else:
        with ProcessPoolExecutor(max_workers=config.workers, mp_context=mp.get_context("spawn"),
                                 initializer=_init_worker, initargs=(net, config, baseline)) as pool:
            futures = [pool.submit(_run_in_worker, index) for index in indices]
            for future in tqdm(as_completed(futures), total=len(futures), desc=config.strategy,
                               disable=not show):
                summaries.append(future.result())

    return aggregate(config, net.node_count, summaries, baseline.profile if baseline else None)
