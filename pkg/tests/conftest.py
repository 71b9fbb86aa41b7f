import os

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from network.generators import generate_ba
from network.graph import Network

settings.register_profile("default", deadline=None)
settings.register_profile("fast", max_examples=5, deadline=None)
settings.register_profile("ci", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


def make_network(node_count, edges):
    return Network.from_edges(node_count, np.asarray(edges, dtype=np.int64).reshape(-1, 2))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def path4():
    """0 - 1 - 2 - 3"""
    return make_network(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def star5():
    """Hub 0 with leaves 1..4."""
    return make_network(5, [(0, 1), (0, 2), (0, 3), (0, 4)])


@pytest.fixture
def triangle():
    return make_network(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture(scope="session")
def ba100():
    return generate_ba(100, 2, 1)


@pytest.fixture(scope="session")
def ba1000():
    return generate_ba(1000, 2, 1)


@pytest.fixture
def run_log(tmp_path, monkeypatch):
    path = tmp_path / "runs.json"
    monkeypatch.setenv("IMMUNIZE_RUN_LOG", str(path))
    return path


@pytest.fixture(scope="session")
def ba1000_dense():
    """<k> near 20: beta = 0.1 is above the epidemic threshold."""
    return generate_ba(1000, 10, 1)
