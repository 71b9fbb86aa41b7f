"""Heterogeneous mean-field SIR: per-degree-class season integration and the
multi-season iteration of the dynamical strategy."""
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from meanfield.profile import VaccProfile, update_vk
from utils.errors import ParameterError

logger = logging.getLogger(__name__)

EXTINCTION_LEVEL = 1e-9
DEFAULT_STEP = 0.01
DEFAULT_HORIZON = 500.0


@dataclass(frozen=True, eq=False)
class MeanFieldState:
    """Densities s_k, i_k, r_k (each class normalized to 1) at time t."""

    degrees: np.ndarray
    s: np.ndarray
    i: np.ndarray
    r: np.ndarray
    t: float = 0.0

    def totals(self):
        return self.s + self.i + self.r


@dataclass(frozen=True, eq=False)
class SeasonSolution:
    final: MeanFieldState
    prevalence: float
    converged: bool
    warning: str | None = None
    times: np.ndarray | None = None
    class_curves: dict | None = None

    @property
    def r_k(self):
        return self.final.r


@dataclass(frozen=True, eq=False)
class MeanFieldSeries:
    prevalences: np.ndarray
    solutions: tuple
    profiles: tuple


def theta(dist, i_k):
    """Infected density reached by following an edge, with excess-degree weights."""
    dist.require_edges()
    i_k = np.asarray(i_k, dtype=np.float64)
    return float(np.dot((dist.degrees - 1) * dist.probabilities, i_k) / dist.mean)


def _resolve_profile(dist, profile):
    if profile is None:
        return VaccProfile.uniform(dist, 0.0)
    if isinstance(profile, VaccProfile):
        if profile.v_k.shape != dist.degrees.shape:
            raise ParameterError("vaccination profile does not match the degree classes")
        return profile
    return VaccProfile.uniform(dist, float(profile))


def integrate_season(dist, profile, beta, i0, h=DEFAULT_STEP, horizon=DEFAULT_HORIZON,
                     method="rk4", record_classes=None):
    """Integrate one season from s_k = 1 - i0, i_k = i0, r_k = 0 until extinction.

    ``profile`` is a VaccProfile or a uniform coverage v. Extinction means
    max_k i_k < 1e-9; reaching ``horizon`` first marks the solution as not
    converged. ``record_classes`` lists degrees whose r_k(t) is kept.
    """
    if not 0.0 < i0 < 1.0:
        raise ParameterError(f"i0 must lie in (0, 1), got {i0}")
    if h <= 0 or horizon <= 0:
        raise ParameterError("step and horizon must be positive")
    dist.require_edges()
    profile = _resolve_profile(dist, profile)

    rate = beta * (1.0 - profile.v_k) * dist.degrees
    edge_weights = (dist.degrees - 1) * dist.probabilities / dist.mean
    tracked = _tracked_indices(dist, record_classes)

    def derivative(s, i):
        force = rate * s * float(np.dot(edge_weights, i))
        return -force, force - i, i

    n = len(dist.degrees)
    s0, i0_vec, r0 = np.full(n, 1.0 - i0), np.full(n, float(i0)), np.zeros(n)
    if method == "rk4":
        s, i, r, t, times, curves = _rk4(derivative, s0, i0_vec, r0, h, horizon, tracked)
        converged = bool(i.max() < EXTINCTION_LEVEL)
    elif method == "rk45":
        s, i, r, t, times, curves, converged = _adaptive(derivative, s0, i0_vec, r0, horizon, tracked)
    else:
        raise ParameterError(f"unknown integration method {method!r}")

    warning = None
    if not converged:
        warning = f"horizon t={horizon} reached with max i_k={i.max():.3g}"
        logger.warning("Mean-field season did not die out: %s", warning)

    final = MeanFieldState(dist.degrees, s, i, r, t)
    return SeasonSolution(
        final=final,
        prevalence=float(np.dot(dist.probabilities, r)),
        converged=converged,
        warning=warning,
        times=times,
        class_curves=None if tracked is None else {
            int(dist.degrees[idx]): curves[:, col] for col, idx in enumerate(tracked)},
    )


def _tracked_indices(dist, record_classes):
    if record_classes is None:
        return None
    lookup = {int(k): idx for idx, k in enumerate(dist.degrees)}
    missing = [k for k in record_classes if int(k) not in lookup]
    if missing:
        raise ParameterError(f"degree classes {missing} are not in the distribution")
    return [lookup[int(k)] for k in record_classes]


def _rk4(derivative, s, i, r, h, horizon, tracked):
    t = 0.0
    steps = int(np.ceil(horizon / h))
    times, rows = ([0.0], [r[tracked].copy()]) if tracked is not None else (None, None)
    for _ in range(steps):
        a = derivative(s, i)
        b = derivative(s + 0.5 * h * a[0], i + 0.5 * h * a[1])
        c = derivative(s + 0.5 * h * b[0], i + 0.5 * h * b[1])
        d = derivative(s + h * c[0], i + h * c[1])
        s = s + h / 6.0 * (a[0] + 2 * b[0] + 2 * c[0] + d[0])
        i = i + h / 6.0 * (a[1] + 2 * b[1] + 2 * c[1] + d[1])
        r = r + h / 6.0 * (a[2] + 2 * b[2] + 2 * c[2] + d[2])
        t += h
        if tracked is not None:
            times.append(t)
            rows.append(r[tracked].copy())
        if i.max() < EXTINCTION_LEVEL:
            break
    if tracked is None:
        return s, i, r, t, None, None
    return s, i, r, t, np.array(times), np.array(rows)


def _adaptive(derivative, s, i, r, horizon, tracked):
    n = len(s)

    def rhs(_t, y):
        return np.concatenate(derivative(y[:n], y[n:2 * n]))

    def extinct(_t, y):
        return y[n:2 * n].max() - EXTINCTION_LEVEL

    extinct.terminal = True
    extinct.direction = -1

    sol = solve_ivp(rhs, (0.0, horizon), np.concatenate([s, i, r]), method="RK45",
                    events=extinct, rtol=1e-8, atol=1e-12)
    y = sol.y[:, -1]
    curves = sol.y[2 * n:, :].T[:, tracked] if tracked is not None else None
    # status 1: stopped by the extinction event
    converged = sol.status == 1 or bool(y[n:2 * n].max() < EXTINCTION_LEVEL)
    times = sol.t if tracked is not None else None
    return y[:n], y[n:2 * n], y[2 * n:], float(sol.t[-1]), times, curves, converged


def run_meanfield_seasons(dist, beta, v, i0, seasons, **integration):
    """r_inf per season: uniform coverage first, then v_k from the last season's r_k."""
    if seasons < 1:
        raise ParameterError(f"seasons must be >= 1, got {seasons}")
    profile = VaccProfile.uniform(dist, v)
    solutions, profiles = [], []
    for season in range(1, seasons + 1):
        if season > 1:
            profile = update_vk(dist, solutions[-1].r_k, v)
        solution = integrate_season(dist, profile, beta, i0, **integration)
        solutions.append(solution)
        profiles.append(profile)
        logger.debug("Mean-field season %d: r_inf=%.5f", season, solution.prevalence)
    return MeanFieldSeries(
        prevalences=np.array([sol.prevalence for sol in solutions]),
        solutions=tuple(solutions),
        profiles=tuple(profiles),
    )
