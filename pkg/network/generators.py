"""Synthetic graph generators."""
import logging
from itertools import combinations

import numpy as np

from network.graph import Network
from utils.errors import ParameterError
from utils.rng import make_rng

logger = logging.getLogger(__name__)


def generate_ba(n, m, rng=None):
    """Barabási-Albert preferential attachment graph.

    Starts from a clique on ``m + 1`` nodes; every later node links to ``m``
    distinct existing nodes drawn from the repeated-endpoint list, rejecting
    duplicate targets. The edge count is ``C(m + 1, 2) + (n - m - 1) * m``.
    """
    if m < 1 or n <= m:
        raise ParameterError(f"BA generator needs n > m >= 1, got n={n}, m={m}")
    rng = make_rng(rng)

    seed_edges = list(combinations(range(m + 1), 2))
    total = len(seed_edges) + (n - m - 1) * m
    edges = np.empty((total, 2), dtype=np.int64)
    edges[:len(seed_edges)] = seed_edges

    # every node appears once per incident edge
    endpoints = np.empty(2 * total, dtype=np.int64)
    filled = 2 * len(seed_edges)
    endpoints[:filled] = edges[:len(seed_edges)].ravel()

    row = len(seed_edges)
    for new in range(m + 1, n):
        targets = set()
        while len(targets) < m:
            targets.add(int(endpoints[rng.integers(filled)]))
        for target in sorted(targets):
            edges[row] = (new, target)
            row += 1
        chosen = np.fromiter(sorted(targets), dtype=np.int64, count=m)
        endpoints[filled:filled + m] = chosen
        endpoints[filled + m:filled + 2 * m] = new
        filled += 2 * m

    net = Network.from_edges(n, edges)
    logger.debug("Generated BA graph n=%d m=%d <k>=%.3f", n, m, 2 * net.edge_count / n)
    return net
