"""Exhaustive outcome distribution of a season on tiny graphs.

Used as a reference for the Monte Carlo engine: the synchronous process is
expanded over every seed and every combination of per-step infections.
"""
from collections import defaultdict
from itertools import product

from epidemic.sir import vaccination_mask
from utils.errors import CapacityError, NoSeedError

MAX_UNVACCINATED = 12


def exact_outcome_distribution(net, vaccinated, params):
    """Map each terminal Recovered set (frozenset) to its exact probability."""
    blocked = vaccination_mask(net.node_count, vaccinated)
    free = [u for u in range(net.node_count) if not blocked[u]]
    if not free:
        raise NoSeedError("every node is vaccinated; no epidemic seed available")
    if len(free) > MAX_UNVACCINATED:
        raise CapacityError(
            f"{len(free)} unvaccinated nodes exceed the exact-enumeration limit of {MAX_UNVACCINATED}")

    neighbors = {u: [w for w in net.neighbors(u).tolist() if not blocked[w]] for u in free}
    beta = params.beta
    memo = {}

    def expand(recovered, infected):
        key = (recovered, infected)
        if key in memo:
            return memo[key]
        if not infected:
            memo[key] = {recovered: 1.0}
            return memo[key]

        pressure = defaultdict(int)
        for u in infected:
            for w in neighbors[u]:
                if w not in recovered and w not in infected:
                    pressure[w] += 1
        exposed = sorted(pressure)
        chances = [1.0 - (1.0 - beta) ** pressure[w] for w in exposed]
        settled = recovered | infected

        outcomes = defaultdict(float)
        for hits in product((False, True), repeat=len(exposed)):
            weight = 1.0
            for hit, chance in zip(hits, chances):
                weight *= chance if hit else 1.0 - chance
            if weight == 0.0:
                continue
            newly = frozenset(w for w, hit in zip(exposed, hits) if hit)
            for final, p in expand(settled, newly).items():
                outcomes[final] += weight * p
        memo[key] = dict(outcomes)
        return memo[key]

    distribution = defaultdict(float)
    for seed in free:
        for final, p in expand(frozenset(), frozenset([seed])).items():
            distribution[final] += p / len(free)
    return dict(distribution)
