"""Random stream helpers.

Every stochastic routine takes an explicit ``numpy.random.Generator``. Replica
streams are keyed on ``(master_seed, index)`` so that a replica's result does
not depend on how many other replicas ran or in which order.
"""
import numpy as np


def make_rng(seed=None):
    """Return a Generator; passes existing generators through untouched."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def replica_rng(master_seed, index):
    return np.random.default_rng(np.random.SeedSequence([int(master_seed), int(index)]))
