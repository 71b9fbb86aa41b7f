import pytest

from immunization.strategies import VaccinationSet
from metrics.structure import network_baseline, vaccinated_profile
from network.structure import k_shell
from utils.errors import UndefinedStatisticError


def test_profile_of_star_leaves(star5):
    profile = vaccinated_profile(star5, VaccinationSet.of([1, 2]))
    assert profile.vaccinated.mean_degree == 1.0
    assert profile.vaccinated.mean_kshell == 1.0
    assert profile.vaccinated.mean_distance == 2.0
    assert profile.baseline.mean_degree == pytest.approx(1.6)
    assert profile.baseline.mean_distance == pytest.approx((4 * 1 + 6 * 2) / 10)


def test_baseline_is_reused(ba100):
    baseline = network_baseline(ba100)
    assert baseline.shells.tolist() == k_shell(ba100).tolist()
    profile = vaccinated_profile(ba100, [0, 1, 2], baseline)
    assert profile.baseline is baseline.profile


def test_hubs_sit_closer_than_average(ba100):
    baseline = network_baseline(ba100)
    hubs = sorted(range(100), key=lambda u: -ba100.degrees[u])[:10]
    profile = vaccinated_profile(ba100, hubs, baseline)
    assert profile.vaccinated.mean_degree > baseline.profile.mean_degree
    assert profile.vaccinated.mean_distance < baseline.profile.mean_distance


def test_single_node_has_no_distance(star5):
    with pytest.raises(UndefinedStatisticError):
        vaccinated_profile(star5, [0])
