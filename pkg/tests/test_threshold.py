import pytest

from experiments.threshold import CRITERION, estimate_threshold, estimates_frame, sweep_coverage, threshold_curve
from meanfield.analytic import uniform_threshold
from network.structure import degree_stats
from utils.errors import ParameterError


def test_zero_beta_needs_no_vaccination(ba1000):
    estimate = estimate_threshold(ba1000, "uniform", 0.0, replicas=3)
    assert estimate.v_c == 0.0
    assert not estimate.saturated
    assert len(estimate.evaluations) == 1


def test_small_network_saturates(ba100):
    # r_inf never drops below 1/N = 0.01 on 100 nodes
    estimate = estimate_threshold(ba100, "uniform", 0.0, replicas=2)
    assert estimate.saturated
    assert estimate.v_c is None
    assert estimate.lower == 0.99
    assert [v for v, _, _ in estimate.evaluations] == [0.0, 0.99]


def test_bracket_straddles_the_criterion(ba1000):
    estimate = estimate_threshold(ba1000, "uniform", 0.3, seasons=3, replicas=5, tolerance=0.05, seed=2)
    assert not estimate.saturated
    assert estimate.upper - estimate.lower <= 0.05
    assert estimate.v_c == estimate.upper
    means = {v: mean for v, mean, _ in estimate.evaluations}
    assert means[estimate.upper] < CRITERION
    assert estimate.lower == 0.0 or means[estimate.lower] >= CRITERION
    assert 0.0 < estimate.v_c < 0.99


@pytest.mark.parametrize("kwargs", [{"beta": 1.5}, {"beta": 0.1, "tolerance": 0.0}, {"beta": 0.1, "ceiling": 1.0}])
def test_rejects_bad_arguments(ba100, kwargs):
    with pytest.raises(ParameterError):
        estimate_threshold(ba100, "uniform", **kwargs)


def test_threshold_curve_follows_beta_grid(ba1000):
    estimates = threshold_curve(ba1000, "targeted", [0.0, 0.2], seasons=2, replicas=2, tolerance=0.1)
    assert [e.beta for e in estimates] == [0.0, 0.2]
    assert estimates[0].v_c == 0.0
    frame = estimates_frame(estimates)
    assert list(frame.columns) == ["strategy", "beta", "v_c", "lower", "upper", "saturated", "evaluations"]
    assert len(frame) == 2


def test_sweep_coverage_rows(ba100):
    frame = sweep_coverage(ba100, "uniform", 0.3, [0.0, 0.9], seasons=2, replicas=10)
    assert frame["v"].tolist() == [0.0, 0.9]
    assert (frame["season"] == 2).all()
    assert frame["r_inf_mean"].iloc[0] > frame["r_inf_mean"].iloc[1]


def test_uniform_estimate_stays_near_the_analytic_bound(ba1000_dense):
    stats = degree_stats(ba1000_dense)
    bound = uniform_threshold(stats.mean_degree, stats.mean_sq_degree, 0.1).v_c
    tolerance = 0.1
    estimate = estimate_threshold(ba1000_dense, "uniform", 0.1, seasons=2, replicas=40,
                                  tolerance=tolerance, seed=5)
    assert not estimate.saturated
    assert estimate.upper - estimate.lower <= tolerance
    # the bracket holding the Monte Carlo threshold starts no further than one width above the bound
    assert estimate.lower <= bound + tolerance
    assert 0.0 < bound < estimate.upper + tolerance
