"""Per-degree-class vaccination probabilities and their season-to-season update."""
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from utils.errors import ParameterError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class VaccProfile:
    """v_k over the support of a degree distribution, with sum_k P(k) v_k = target."""

    degrees: np.ndarray
    v_k: np.ndarray
    target: float
    degenerate: bool = False

    @classmethod
    def uniform(cls, dist, v, degenerate=False):
        if not 0.0 <= v <= 1.0:
            raise ParameterError(f"v must lie in [0, 1], got {v}")
        return cls(dist.degrees, np.full(len(dist.degrees), float(v)), float(v), degenerate)

    def coverage(self, dist):
        return float(np.dot(dist.probabilities, self.v_k))


def _as_class_vector(dist, values, name):
    values = np.asarray(values, dtype=np.float64)
    if values.shape != dist.degrees.shape:
        raise ParameterError(f"{name} needs one value per degree class ({len(dist.degrees)})")
    if np.any(values < -1e-8) or np.any(values > 1 + 1e-8):
        raise ParameterError(f"{name} values must lie in [0, 1]")
    return np.clip(values, 0.0, 1.0)


def update_vk(dist, r_k, v):
    """Next season's v_k from last season's per-class prevalence r_k.

    A degree-k node is expected to score W_k = k p + r_k, with p the chance
    that an edge leads to a recovered node; v_k is proportional to W_k.
    Classes pushed above 1 are clamped and the excess is shared by the rest
    in proportion to their W_k.
    """
    if not 0.0 <= v < 1.0:
        raise ParameterError(f"v must lie in [0, 1), got {v}")
    r_k = _as_class_vector(dist, r_k, "r_k")
    if not np.any(r_k > 0):
        logger.warning("All r_k are zero; keeping uniform vaccination v_k = %.4g", v)
        return VaccProfile.uniform(dist, v, degenerate=True)

    k = dist.degrees.astype(np.float64)
    P = dist.probabilities
    p = float(np.dot(dist.excess_weights(), r_k))
    weights = k * p + r_k

    v_k = np.zeros_like(weights)
    clamped = np.zeros(len(weights), dtype=bool)
    while True:
        free = ~clamped
        budget = v - float(P[clamped].sum())
        norm = float(np.dot(weights[free], P[free]))
        if norm > 0:
            v_k[free] = weights[free] * budget / norm
        else:
            v_k[free] = budget / float(P[free].sum())
        over = free & (v_k > 1.0)
        if not over.any():
            break
        clamped |= over
        v_k[over] = 1.0
    if clamped.any():
        logger.debug("Clamped v_k at 1 for degrees %s", dist.degrees[clamped].tolist())
    return VaccProfile(dist.degrees, v_k, float(v))
