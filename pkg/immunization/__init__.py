from immunization.dynamical import DynamicalStrategy, plan_successors, seasonal_update, w_score, w_scores
from immunization.seasons import (
    STRATEGY_IDS,
    SeasonHistory,
    SeasonRecord,
    get_strategy,
    run_seasons,
)
from immunization.strategies import (
    AcquaintanceStrategy,
    TargetedStrategy,
    UniformStrategy,
    VaccinationSet,
    select_acquaintance,
    select_targeted,
    select_uniform,
    vaccination_count,
)

__all__ = [
    "VaccinationSet",
    "SeasonHistory",
    "SeasonRecord",
    "STRATEGY_IDS",
    "UniformStrategy",
    "TargetedStrategy",
    "AcquaintanceStrategy",
    "DynamicalStrategy",
    "select_uniform",
    "select_targeted",
    "select_acquaintance",
    "vaccination_count",
    "w_score",
    "w_scores",
    "plan_successors",
    "seasonal_update",
    "get_strategy",
    "run_seasons",
]
