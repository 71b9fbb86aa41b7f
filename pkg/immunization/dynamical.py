"""Dynamical seasonal immunization driven by the W-score of the last epidemic."""
from __future__ import annotations

import logging

import numpy as np

from epidemic.sir import NodeState
from immunization.strategies import VaccinationSet, select_uniform

logger = logging.getLogger(__name__)


def w_scores(net, outcome):
    """W for every node: Recovered neighbors, plus one if the node itself recovered.

    Vaccinated nodes are never Recovered, so they score their neighbors only.
    """
    recovered = (outcome.state == NodeState.RECOVERED).astype(np.int64)
    owners = np.repeat(np.arange(net.node_count), net.degrees)
    exposure = np.bincount(owners, weights=recovered[net.indices], minlength=net.node_count)
    return exposure.astype(np.int64) + recovered


def w_score(net, outcome, u):
    neighbors = net.neighbors(u)
    score = int(np.count_nonzero(outcome.state[neighbors] == NodeState.RECOVERED))
    return score + int(outcome.state[u] == NodeState.RECOVERED)


def plan_successors(net, outcome, current, rng, scores=None):
    """Map each vaccinated node to the node inheriting its slot next season.

    Members are visited in a fresh random order; each takes the best-scoring
    node of {u} plus its neighbors not already claimed, keeping itself on a
    tie. When the whole pool is claimed the slot moves to a random unclaimed,
    unvaccinated node so the set keeps its size.
    """
    scores = w_scores(net, outcome) if scores is None else scores
    order = rng.permutation(current.as_array())
    claimed = set()
    moves = {}

    for u in order.tolist():
        pool = [y for y in [u, *net.neighbors(u).tolist()] if y not in claimed]
        if pool:
            pool_scores = scores[pool]
            best = pool_scores.max()
            tied = [y for y, s in zip(pool, pool_scores) if s == best]
            successor = u if u in tied else int(tied[rng.integers(len(tied))])
        else:
            successor = _fallback_node(net.node_count, claimed, current, rng)
            logger.debug("Slot of node %d fell back to node %d", u, successor)
        claimed.add(successor)
        moves[u] = successor
    return moves


def _fallback_node(node_count, claimed, current, rng):
    free = [y for y in range(node_count) if y not in claimed and y not in current.members]
    if not free:
        free = [y for y in range(node_count) if y not in claimed]
    return int(free[rng.integers(len(free))])


def seasonal_update(net, outcome, current, rng):
    moves = plan_successors(net, outcome, current, rng)
    return VaccinationSet.of(moves.values(), current.season + 1)


class DynamicalStrategy:
    """Uniform in the first season, then W-guided local migration of each slot."""

    name = "dynamical"

    def initial(self, net, count, rng):
        return select_uniform(net, count, rng, season=1)

    def next(self, net, outcome, current, rng):
        return seasonal_update(net, outcome, current, rng)

    def __repr__(self):
        return "DynamicalStrategy()"
