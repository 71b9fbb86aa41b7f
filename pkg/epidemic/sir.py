"""Discrete-time synchronous SIR spreading for one epidemic season."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import IntEnum

import numpy as np

from utils.errors import NoSeedError, ParameterError
from utils.rng import make_rng

logger = logging.getLogger(__name__)


class NodeState(IntEnum):
    SUSCEPTIBLE = 0
    INFECTED = 1
    RECOVERED = 2
    VACCINATED = 3


@dataclass(frozen=True)
class SpreadParams:
    """Per-edge per-step transmission probability; recovery is certain after one step."""

    beta: float
    mu: float = 1.0

    def __post_init__(self):
        if not 0.0 <= self.beta <= 1.0:
            raise ParameterError(f"beta must lie in [0, 1], got {self.beta}")
        if self.mu != 1.0:
            raise ParameterError("only mu = 1 is supported")


@dataclass(frozen=True, eq=False)
class EpidemicOutcome:
    """Terminal labels of one season.

    ``timeline[t]`` holds the (S, I, R) counts at the start of step ``t``;
    its last entry is the terminal state.
    """

    state: np.ndarray
    seed: int
    duration: int
    timeline: tuple = ()

    @property
    def recovered_count(self):
        return int(np.count_nonzero(self.state == NodeState.RECOVERED))

    def recovered_nodes(self):
        return np.flatnonzero(self.state == NodeState.RECOVERED)

    def recovered_set(self):
        return frozenset(self.recovered_nodes().tolist())

    def vaccinated_nodes(self):
        return np.flatnonzero(self.state == NodeState.VACCINATED)


def vaccination_mask(node_count, vaccinated):
    members = np.fromiter((int(u) for u in vaccinated), dtype=np.int64)
    if members.size and (members.min() < 0 or members.max() >= node_count):
        raise ParameterError("vaccinated set contains ids outside the network")
    mask = np.zeros(node_count, dtype=bool)
    mask[members] = True
    return mask


def gather_neighbors(net, nodes):
    """Concatenated neighbor lists of ``nodes`` (with repetition)."""
    starts = net.indptr[nodes]
    counts = net.indptr[nodes + 1] - starts
    total = int(counts.sum())
    if total == 0:
        return np.empty(0, dtype=np.int64)
    offsets = np.repeat(starts - (np.cumsum(counts) - counts), counts)
    return net.indices[offsets + np.arange(total)]


def run_sir(net, vaccinated, params, rng=None):
    """Spread from one random unvaccinated seed until no infected node is left.

    All transmissions of a step are drawn against the step-start state, then
    applied together; infected nodes recover after exactly one step.
    """
    rng = make_rng(rng)
    state = np.full(net.node_count, NodeState.SUSCEPTIBLE, dtype=np.int8)
    state[vaccination_mask(net.node_count, vaccinated)] = NodeState.VACCINATED

    candidates = np.flatnonzero(state == NodeState.SUSCEPTIBLE)
    if candidates.size == 0:
        raise NoSeedError("every node is vaccinated; no epidemic seed available")
    seed = int(candidates[rng.integers(candidates.size)])

    state[seed] = NodeState.INFECTED
    frontier = np.array([seed], dtype=np.int64)
    susceptible, recovered = candidates.size - 1, 0
    timeline = [(susceptible, 1, 0)]
    duration = 0

    while frontier.size:
        targets = gather_neighbors(net, frontier)
        targets = targets[state[targets] == NodeState.SUSCEPTIBLE]
        if params.beta < 1.0:
            targets = targets[rng.random(targets.size) < params.beta]
        infected = np.unique(targets)

        state[frontier] = NodeState.RECOVERED
        state[infected] = NodeState.INFECTED
        recovered += frontier.size
        susceptible -= infected.size
        frontier = infected
        duration += 1
        timeline.append((susceptible, int(frontier.size), recovered))

    return EpidemicOutcome(state=state, seed=seed, duration=duration, timeline=tuple(timeline))


def prevalence(outcome, net):
    """Fraction of all N nodes (vaccinated included) that ended Recovered."""
    return outcome.recovered_count / net.node_count
