"""Where the vaccinated nodes sit in the network: degree, k-shell, closeness."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from network.structure import k_shell, mean_pairwise_distance


@dataclass(frozen=True)
class StructureProfile:
    mean_degree: float
    mean_kshell: float
    mean_distance: float


@dataclass(frozen=True, eq=False)
class NetworkBaseline:
    profile: StructureProfile
    shells: np.ndarray


@dataclass(frozen=True)
class VaccinatedProfile:
    vaccinated: StructureProfile
    baseline: StructureProfile


def _profile(net, nodes, shells):
    return StructureProfile(
        mean_degree=float(net.degrees[nodes].mean()),
        mean_kshell=float(shells[nodes].mean()),
        mean_distance=mean_pairwise_distance(net, nodes),
    )


def network_baseline(net):
    """Whole-network profile; expensive on large graphs, so compute it once."""
    shells = k_shell(net)
    return NetworkBaseline(_profile(net, np.arange(net.node_count), shells), shells)


def vaccinated_profile(net, vset, baseline=None):
    baseline = network_baseline(net) if baseline is None else baseline
    nodes = np.unique(np.fromiter((int(u) for u in vset), dtype=np.int64))
    return VaccinatedProfile(_profile(net, nodes, baseline.shells), baseline.profile)
