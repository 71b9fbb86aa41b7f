"""Vaccinated-set containers and the three season-independent strategies."""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from utils.errors import ParameterError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VaccinationSet:
    """The vaccinated nodes of one season; iterates in ascending id order."""

    members: frozenset
    season: int = 1

    @classmethod
    def of(cls, nodes, season=1):
        return cls(frozenset(int(u) for u in nodes), season)

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)

    def __contains__(self, node):
        return node in self.members

    def as_array(self):
        return np.fromiter(sorted(self.members), dtype=np.int64, count=len(self.members))


def vaccination_count(v, node_count):
    """round(v * N), halves rounded up."""
    if not 0.0 <= v < 1.0:
        raise ParameterError(f"vaccinated proportion v must lie in [0, 1), got {v}")
    return int(math.floor(v * node_count + 0.5))


def _check_count(net, count):
    if count < 0 or count > net.node_count:
        raise ParameterError(f"cannot vaccinate {count} of {net.node_count} nodes")


def select_uniform(net, count, rng, season=1):
    _check_count(net, count)
    chosen = rng.choice(net.node_count, size=count, replace=False)
    return VaccinationSet.of(chosen.tolist(), season)


def select_targeted(net, count, rng, season=1):
    """Highest-degree nodes; ties at the cutoff degree are broken at random."""
    _check_count(net, count)
    order = np.lexsort((rng.random(net.node_count), -net.degrees))
    return VaccinationSet.of(order[:count].tolist(), season)


def select_acquaintance(net, count, rng, season=1):
    """Vaccinate a random neighbor of a random node until ``count`` are covered."""
    _check_count(net, count)
    reachable = int(np.count_nonzero(net.degrees))
    if count > reachable:
        raise ParameterError(f"only {reachable} nodes can be reached as acquaintances")
    chosen = set()
    while len(chosen) < count:
        neighbors = net.neighbors(int(rng.integers(net.node_count)))
        if neighbors.size:
            chosen.add(int(neighbors[rng.integers(neighbors.size)]))
    return VaccinationSet.of(chosen, season)


class StaticStrategy:
    """A strategy that redraws its set each season, ignoring past epidemics."""

    name = None
    selector = None

    def initial(self, net, count, rng):
        return type(self).selector(net, count, rng, season=1)

    def next(self, net, outcome, current, rng):
        return type(self).selector(net, len(current), rng, season=current.season + 1)

    def __repr__(self):
        return f"{type(self).__name__}()"


class UniformStrategy(StaticStrategy):
    name = "uniform"
    selector = select_uniform


class TargetedStrategy(StaticStrategy):
    name = "targeted"
    selector = select_targeted


class AcquaintanceStrategy(StaticStrategy):
    name = "acquaintance"
    selector = select_acquaintance
