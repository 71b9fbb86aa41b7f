"""Season loop: alternate vaccination and one SIR epidemic, keeping the record."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from epidemic.sir import EpidemicOutcome, SpreadParams, prevalence, run_sir
from immunization.dynamical import DynamicalStrategy
from immunization.strategies import (
    AcquaintanceStrategy,
    TargetedStrategy,
    UniformStrategy,
    VaccinationSet,
    vaccination_count,
)
from utils.errors import ParameterError
from utils.rng import make_rng

logger = logging.getLogger(__name__)

STRATEGIES = {
    cls.name: cls
    for cls in (UniformStrategy, TargetedStrategy, AcquaintanceStrategy, DynamicalStrategy)
}
STRATEGY_IDS = tuple(STRATEGIES)


def get_strategy(strategy):
    """Resolve a strategy id ("uniform", "targeted", ...) or pass an instance through."""
    if isinstance(strategy, str):
        try:
            return STRATEGIES[strategy]()
        except KeyError:
            raise ParameterError(
                f"unknown strategy {strategy!r}; expected one of {', '.join(STRATEGY_IDS)}") from None
    return strategy


@dataclass(frozen=True)
class SeasonRecord:
    season: int
    vaccinated: VaccinationSet
    outcome: EpidemicOutcome
    prevalence: float


@dataclass
class SeasonHistory:
    strategy: str
    beta: float
    v: float
    node_count: int
    vaccinated_count: int
    seed: int | None = None
    records: list = field(default_factory=list)

    def append(self, record):
        expected = len(self.records) + 1
        if record.season != expected:
            raise ParameterError(f"season {record.season} appended where {expected} was expected")
        if len(record.vaccinated) != self.vaccinated_count:
            raise ParameterError(
                f"season {record.season} vaccinated {len(record.vaccinated)} nodes, "
                f"expected {self.vaccinated_count}")
        self.records.append(record)

    def __len__(self):
        return len(self.records)

    def season(self, s):
        """Record of season ``s`` (1-based)."""
        return self.records[s - 1]

    def vaccinated_sets(self):
        return [record.vaccinated.members for record in self.records]

    def prevalences(self):
        return np.array([record.prevalence for record in self.records], dtype=np.float64)


def run_seasons(net, strategy, beta, v, seasons, rng=None, seed=None):
    """Run ``seasons`` consecutive vaccination + epidemic cycles on ``net``."""
    if seasons < 1:
        raise ParameterError(f"seasons must be >= 1, got {seasons}")
    strategy = get_strategy(strategy)
    params = SpreadParams(beta)
    count = vaccination_count(v, net.node_count)
    rng = make_rng(rng if rng is not None else seed)

    history = SeasonHistory(strategy=strategy.name, beta=beta, v=v, node_count=net.node_count,
                            vaccinated_count=count, seed=seed)
    current = strategy.initial(net, count, rng)
    for season in range(1, seasons + 1):
        if season > 1:
            current = strategy.next(net, history.records[-1].outcome, current, rng)
        outcome = run_sir(net, current, params, rng)
        history.append(SeasonRecord(season, current, outcome, prevalence(outcome, net)))
        logger.debug("%s season %d: r_inf=%.4f", strategy.name, season, history.records[-1].prevalence)
    return history
