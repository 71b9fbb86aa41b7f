from meanfield.analytic import AnalyticThreshold, closed_form_prevalence, solve_phi, uniform_threshold
from meanfield.profile import VaccProfile, update_vk
from meanfield.solver import (
    MeanFieldSeries,
    MeanFieldState,
    SeasonSolution,
    integrate_season,
    run_meanfield_seasons,
    theta,
)

__all__ = [
    "MeanFieldState",
    "MeanFieldSeries",
    "SeasonSolution",
    "VaccProfile",
    "AnalyticThreshold",
    "theta",
    "integrate_season",
    "run_meanfield_seasons",
    "update_vk",
    "closed_form_prevalence",
    "solve_phi",
    "uniform_threshold",
]
