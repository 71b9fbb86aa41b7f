from epidemic.exact import exact_outcome_distribution
from epidemic.sir import EpidemicOutcome, NodeState, SpreadParams, prevalence, run_sir

__all__ = [
    "EpidemicOutcome",
    "NodeState",
    "SpreadParams",
    "run_sir",
    "prevalence",
    "exact_outcome_distribution",
]
