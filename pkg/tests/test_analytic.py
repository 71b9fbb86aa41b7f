import math

import pytest
from scipy.optimize import brentq

from meanfield.analytic import closed_form_prevalence, solve_phi, uniform_threshold
from network.datasets import reference_networks
from network.structure import DegreeDistribution
from utils.errors import DegenerateDistributionError, ParameterError

TABULATED = [
    (name, beta)
    for name in ("Wiki-Vote", "Slashdot", "Enron")
    for beta in (0.1, 0.05)
]


@pytest.mark.parametrize("name, beta", TABULATED)
def test_threshold_reproduces_reference_table(name, beta):
    ref = reference_networks()[name]
    expected = ref.vc_beta_010 if beta == 0.1 else ref.vc_beta_005
    threshold = uniform_threshold(ref.mean_degree, ref.mean_sq_degree, beta)
    assert threshold.v_c == pytest.approx(expected, abs=1e-3)
    assert threshold.needs_immunization


def test_epinions_row_disagrees_with_its_own_moments():
    # the published Epinions thresholds do not follow from its published <k>, <k^2>
    ref = reference_networks()["Epinions"]
    assert uniform_threshold(ref.mean_degree, ref.mean_sq_degree, 0.1).v_c == pytest.approx(0.948, abs=1e-3)
    assert uniform_threshold(ref.mean_degree, ref.mean_sq_degree, 0.05).v_c == pytest.approx(0.896, abs=1e-3)
    assert ref.vc_beta_010 == 0.955
    assert ref.vc_beta_005 == 0.909


def test_wiki_vote_example():
    assert uniform_threshold(29.4, 4554.8, 0.1).v_c == pytest.approx(0.935, abs=1e-3)


def test_negative_threshold_means_no_immunization_needed():
    threshold = uniform_threshold(2.0, 4.5, 0.1)
    assert threshold.v_c == pytest.approx(-7.0)
    assert not threshold.needs_immunization


@pytest.mark.parametrize("mean_k, mean_k2, beta, error", [
    (3.0, 12.0, 0.0, ParameterError),
    (0.0, 12.0, 0.1, ParameterError),
    (3.0, 3.0, 0.1, DegenerateDistributionError),
    (3.0, 2.0, 0.1, ParameterError),
])
def test_threshold_rejects_bad_moments(mean_k, mean_k2, beta, error):
    with pytest.raises(error):
        uniform_threshold(mean_k, mean_k2, beta)


def regular_prevalence(k, lam):
    """Root of phi = (k - 1)/k (1 - exp(-lam k phi)) on (0, 1], by bracketing."""
    def gap(phi):
        return phi - (k - 1) / k * (1 - math.exp(-lam * k * phi))
    phi = brentq(gap, 1e-9, 1.0, xtol=1e-15)
    return 1 - math.exp(-lam * k * phi)


@pytest.mark.parametrize("beta, v", [(0.5, 0.0), (0.8, 0.2), (0.9, 0.5)])
def test_closed_form_on_regular_distribution(beta, v):
    dist = DegreeDistribution.from_mapping({4: 1.0})
    expected = regular_prevalence(4, beta * (1 - v))
    assert closed_form_prevalence(dist, beta, v) == pytest.approx(expected, abs=1e-9)


def test_closed_form_is_zero_below_threshold():
    dist = DegreeDistribution.from_mapping({4: 1.0})
    # slope beta (1 - v) (<k^2> - <k>) / <k> = 0.3 <= 1
    assert solve_phi(dist, 0.1, 0.0) == 0.0
    assert closed_form_prevalence(dist, 0.1, 0.0) == 0.0


def test_closed_form_decreases_with_coverage():
    dist = DegreeDistribution.from_mapping({2: 0.3, 5: 0.5, 20: 0.2})
    values = [closed_form_prevalence(dist, 0.3, v) for v in (0.0, 0.2, 0.4, 0.6)]
    assert values == sorted(values, reverse=True)
    assert values[0] > 0


def test_solve_phi_rejects_bad_coverage():
    dist = DegreeDistribution.from_mapping({4: 1.0})
    with pytest.raises(ParameterError):
        solve_phi(dist, 0.3, 1.0)


def test_closed_form_just_above_threshold():
    dist = DegreeDistribution.from_mapping({4: 1.0})
    beta = (1 + 3e-5) / 3
    value = closed_form_prevalence(dist, beta, 0.0)
    assert 0.0 < value < 1e-3
    assert value == pytest.approx(regular_prevalence(4, beta), abs=1e-9)


def test_closed_form_needs_edges_in_every_class():
    dist = DegreeDistribution.from_mapping({0: 0.5, 4: 0.5})
    with pytest.raises(DegenerateDistributionError):
        solve_phi(dist, 0.9, 0.0)
