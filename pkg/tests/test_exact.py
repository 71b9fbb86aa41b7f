from collections import Counter

import networkx as nx
import numpy as np
import pytest

from epidemic.exact import exact_outcome_distribution
from epidemic.sir import SpreadParams, run_sir
from network.graph import Network
from utils.errors import CapacityError, NoSeedError

from tests.conftest import make_network


def small_connected_graphs(max_nodes):
    for graph in nx.graph_atlas_g():
        n = graph.number_of_nodes()
        if 2 <= n <= max_nodes and nx.is_connected(graph):
            yield Network.from_edges(n, np.array(list(graph.edges()), dtype=np.int64).reshape(-1, 2))


def monte_carlo_frequencies(net, vaccinated, beta, runs, seed):
    rng = np.random.default_rng(seed)
    params = SpreadParams(beta)
    tally = Counter(run_sir(net, vaccinated, params, rng).recovered_set() for _ in range(runs))
    return {outcome: count / runs for outcome, count in tally.items()}


def assert_frequencies_match(exact, observed, runs):
    assert set(observed) <= set(exact)
    for outcome, p in exact.items():
        stderr = np.sqrt(p * (1 - p) / runs)
        assert abs(observed.get(outcome, 0.0) - p) <= 4 * stderr + 3 / runs, outcome


def test_probabilities_sum_to_one(star5):
    dist = exact_outcome_distribution(star5, [], SpreadParams(0.3))
    assert sum(dist.values()) == pytest.approx(1.0, abs=1e-12)


def test_zero_beta_gives_uniform_singletons(star5):
    dist = exact_outcome_distribution(star5, [], SpreadParams(0.0))
    assert dist == pytest.approx({frozenset([u]): 0.2 for u in range(5)})


def test_full_beta_with_cut_vertex_vaccinated(path4):
    dist = exact_outcome_distribution(path4, [1], SpreadParams(1.0))
    assert dist == pytest.approx({frozenset([0]): 1 / 3, frozenset([2, 3]): 2 / 3})


def test_triangle_is_synchronous(triangle):
    beta = 0.4
    dist = exact_outcome_distribution(triangle, [], SpreadParams(beta))
    full = frozenset([0, 1, 2])
    # both neighbours at once, or one now and the last one a step later
    assert dist[full] == pytest.approx(beta ** 2 + 2 * beta ** 2 * (1 - beta))
    assert dist[frozenset([0])] == pytest.approx((1 - beta) ** 2 / 3)


def test_star_seed_alone(star5):
    beta = 0.3
    dist = exact_outcome_distribution(star5, [], SpreadParams(beta))
    alone = sum(p for outcome, p in dist.items() if len(outcome) == 1)
    assert alone == pytest.approx(0.2 * (1 - beta) ** 4 + 0.8 * (1 - beta))


def test_capacity_limit():
    net = make_network(13, [(u, u + 1) for u in range(12)])
    with pytest.raises(CapacityError):
        exact_outcome_distribution(net, [], SpreadParams(0.5))
    assert exact_outcome_distribution(net, [0], SpreadParams(0.5))


def test_all_vaccinated(triangle):
    with pytest.raises(NoSeedError):
        exact_outcome_distribution(triangle, [0, 1, 2], SpreadParams(0.5))


@pytest.mark.parametrize("beta", [0.0, 0.3, 1.0])
def test_monte_carlo_matches_exact_on_small_graphs(beta):
    for index, net in enumerate(small_connected_graphs(4)):
        exact = exact_outcome_distribution(net, [], SpreadParams(beta))
        observed = monte_carlo_frequencies(net, [], beta, 4000, seed=index)
        assert_frequencies_match(exact, observed, 4000)


@pytest.mark.slow
@pytest.mark.parametrize("beta", [0.0, 0.3, 1.0])
def test_monte_carlo_matches_exact_on_six_node_graphs(beta):
    runs = 20_000
    for index, net in enumerate(small_connected_graphs(6)):
        exact = exact_outcome_distribution(net, [], SpreadParams(beta))
        observed = monte_carlo_frequencies(net, [], beta, runs, seed=index)
        assert_frequencies_match(exact, observed, runs)


def test_monte_carlo_matches_exact_with_vaccination():
    net = make_network(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    exact = exact_outcome_distribution(net, [3], SpreadParams(0.5))
    observed = monte_carlo_frequencies(net, [3], 0.5, 20_000, seed=1)
    assert_frequencies_match(exact, observed, 20_000)
