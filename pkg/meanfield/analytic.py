"""Closed-form first-season prevalence and the uniform-immunization threshold."""
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from utils.errors import DegenerateDistributionError, NumericError, ParameterError

logger = logging.getLogger(__name__)

PHI_FLOOR = 1e-12
TOLERANCE = 1e-15


@dataclass(frozen=True)
class AnalyticThreshold:
    """v_c from the degree moments; negative values mean no immunization is needed."""

    v_c: float
    needs_immunization: bool


def solve_phi(dist, beta, v):
    """Nontrivial root of the phi self-consistency equation, or 0 below threshold.

    With w_k = (k - 1) P(k) / <k> the equation reads
    phi = -sum_k w_k expm1(-lam k phi); dividing by phi leaves a decreasing
    function whose root brentq brackets on [PHI_FLOOR, 1].
    """
    if not 0.0 <= v < 1.0:
        raise ParameterError(f"v must lie in [0, 1), got {v}")
    dist.require_edges()
    mean = dist.mean
    k = dist.degrees.astype(np.float64)
    weights = (k - 1) * dist.probabilities / mean
    lam = beta * (1.0 - v)

    # phi = 0 always solves; a positive root exists only when the slope there exceeds 1
    if lam * (dist.second_moment - mean) / mean <= 1.0:
        return 0.0

    def gain(phi):
        return float(np.dot(weights, -np.expm1(-lam * k * phi))) / phi - 1.0

    if gain(PHI_FLOOR) <= 0.0:
        logger.debug("phi root below %.0e (beta=%g, v=%g); treating as 0", PHI_FLOOR, beta, v)
        return 0.0
    try:
        return brentq(gain, PHI_FLOOR, 1.0, xtol=TOLERANCE)
    except (RuntimeError, ValueError) as exc:
        raise NumericError(f"phi root search failed (beta={beta}, v={v}): {exc}") from None


def closed_form_prevalence(dist, beta, v):
    """First-season r_inf = sum_k P(k) (1 - exp(-beta (1 - v) k phi))."""
    phi = solve_phi(dist, beta, v)
    lam = beta * (1.0 - v)
    return float(np.dot(dist.probabilities, 1.0 - np.exp(-lam * dist.degrees * phi)))


def uniform_threshold(mean_k, mean_k2, beta):
    """v_c = 1 - <k> / (beta (<k^2> - <k>)), returned as-is even when negative."""
    if beta <= 0:
        raise ParameterError(f"beta must be positive, got {beta}")
    if mean_k <= 0:
        raise ParameterError(f"<k> must be positive, got {mean_k}")
    if mean_k2 == mean_k:
        raise DegenerateDistributionError("<k^2> = <k>: threshold formula divides by zero")
    if mean_k2 < mean_k:
        raise ParameterError(f"<k^2> ({mean_k2}) must exceed <k> ({mean_k})")
    v_c = 1.0 - mean_k / (beta * (mean_k2 - mean_k))
    if v_c <= 0:
        logger.info("v_c = %.4f <= 0: the epidemic is subcritical without vaccination", v_c)
    return AnalyticThreshold(v_c=float(v_c), needs_immunization=v_c > 0)
