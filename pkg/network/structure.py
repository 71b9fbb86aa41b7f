"""Structural statistics: degree distribution, clustering, k-shell, distances."""
from __future__ import annotations

import logging
from dataclasses import dataclass

import networkx as nx
import numpy as np
import pandas as pd
from scipy.sparse.csgraph import shortest_path

from utils.errors import DegenerateDistributionError, ParameterError, UndefinedStatisticError

logger = logging.getLogger(__name__)

DISTANCE_CHUNK = 256


@dataclass(frozen=True, eq=False)
class DegreeDistribution:
    """P(k) over the support ``degrees`` (ascending, P(k) > 0)."""

    degrees: np.ndarray
    probabilities: np.ndarray

    def __post_init__(self):
        if len(self.degrees) != len(self.probabilities) or len(self.degrees) == 0:
            raise ParameterError("degree distribution needs matching, non-empty arrays")
        if np.any(self.probabilities < 0):
            raise ParameterError("P(k) must be non-negative")
        if abs(self.probabilities.sum() - 1.0) > 1e-12:
            raise ParameterError(f"P(k) sums to {self.probabilities.sum():.15g}, not 1")
        self.degrees.setflags(write=False)
        self.probabilities.setflags(write=False)

    @classmethod
    def from_mapping(cls, mapping):
        items = sorted((int(k), float(p)) for k, p in mapping.items() if p > 0)
        degrees = np.array([k for k, _ in items], dtype=np.int64)
        probabilities = np.array([p for _, p in items], dtype=np.float64)
        return cls(degrees, probabilities)

    @classmethod
    def from_network(cls, net):
        counts = np.bincount(net.degrees)
        support = np.flatnonzero(counts)
        return cls(support.astype(np.int64), counts[support] / net.node_count)

    @classmethod
    def from_file(cls, path):
        """Read a two-column ``k P(k)`` text file; ``#`` starts a comment."""
        frame = pd.read_csv(path, sep=r"\s+", comment="#", header=None, names=["k", "p"])
        if frame.empty:
            raise ParameterError(f"{path}: no degree classes")
        if (frame["k"] < 0).any():
            raise ParameterError(f"{path}: negative degree class")
        frame = frame.groupby("k", as_index=False)["p"].sum()
        total = frame["p"].sum()
        if abs(total - 1.0) > 1e-6:
            raise ParameterError(f"{path}: probabilities sum to {total:.9g}")
        frame = frame[frame["p"] > 0]
        probabilities = frame["p"].to_numpy(dtype=np.float64)
        return cls(frame["k"].to_numpy(dtype=np.int64), probabilities / probabilities.sum())

    @property
    def mean(self):
        return float(np.dot(self.degrees, self.probabilities))

    @property
    def second_moment(self):
        return float(np.dot(self.degrees.astype(np.float64) ** 2, self.probabilities))

    @property
    def max_degree(self):
        return int(self.degrees[-1])

    def excess_weights(self):
        """eta(k) = k P(k) / <k>, the degree law seen at the end of an edge."""
        return self.degrees * self.probabilities / self.mean

    def as_dict(self):
        return dict(zip(self.degrees.tolist(), self.probabilities.tolist()))

    def require_edges(self):
        """Raise unless <k> > 0 and every class has k >= 1."""
        if self.mean <= 0:
            raise DegenerateDistributionError("<k> = 0: no edges to follow")
        if self.degrees[0] < 1:
            raise DegenerateDistributionError(
                f"degree class k={int(self.degrees[0])} has no edges; the mean-field model needs k >= 1")
        return self


@dataclass(frozen=True)
class DegreeStats:
    distribution: DegreeDistribution
    node_count: int
    edge_count: int
    mean_degree: float
    mean_sq_degree: float
    clustering: float
    max_degree: int


def degree_stats(net):
    if net.node_count == 0:
        raise ParameterError("degree_stats needs a non-empty network")
    degrees = net.degrees.astype(np.float64)
    clustering = nx.average_clustering(net.to_networkx()) if net.edge_count else 0.0
    return DegreeStats(
        distribution=DegreeDistribution.from_network(net),
        node_count=net.node_count,
        edge_count=net.edge_count,
        mean_degree=float(degrees.mean()),
        mean_sq_degree=float((degrees ** 2).mean()),
        clustering=float(clustering),
        max_degree=net.max_degree,
    )


def k_shell(net):
    """Core number of every node as an array indexed by node id.

    Isolated nodes get shell 0.
    """
    cores = nx.core_number(net.to_networkx())
    return np.array([cores[u] for u in range(net.node_count)], dtype=np.int64)


def mean_pairwise_distance(net, nodes):
    """Mean shortest-path length over unordered pairs of ``nodes`` in the full graph."""
    nodes = np.unique(np.asarray(list(nodes), dtype=np.int64))
    if len(nodes) < 2:
        raise UndefinedStatisticError("mean pairwise distance needs at least 2 nodes")

    total = 0.0
    for start in range(0, len(nodes), DISTANCE_CHUNK):
        rows = nodes[start:start + DISTANCE_CHUNK]
        dist = shortest_path(net.csr, directed=False, unweighted=True, indices=rows)[:, nodes]
        if not np.all(np.isfinite(dist)):
            raise UndefinedStatisticError("nodes are not mutually reachable")
        total += float(dist.sum())
    pairs = len(nodes) * (len(nodes) - 1) / 2
    return total / 2 / pairs
