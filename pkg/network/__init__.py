from network.graph import Network, giant_component, load_edge_list, write_edge_list
from network.generators import generate_ba
from network.structure import (
    DegreeDistribution,
    DegreeStats,
    degree_stats,
    k_shell,
    mean_pairwise_distance,
)

__all__ = [
    "Network",
    "DegreeDistribution",
    "DegreeStats",
    "load_edge_list",
    "write_edge_list",
    "giant_component",
    "generate_ba",
    "degree_stats",
    "k_shell",
    "mean_pairwise_distance",
]
