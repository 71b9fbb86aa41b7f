"""Overlap statistics of the vaccinated sets across seasons.

Season numbers are 1-based throughout; all ratios use the fixed set size vN
as denominator except the repeat-frequency law, which is normalized over the
nodes vaccinated at least once.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from utils.errors import ParameterError, UndefinedStatisticError


@dataclass(frozen=True)
class RecurrenceReport:
    q1: dict = field(default_factory=dict)
    q2: dict = field(default_factory=dict)
    a_streak: dict = field(default_factory=dict)
    f_repeat: dict = field(default_factory=dict)
    upto: int | None = None


def _season_sets(history):
    if hasattr(history, "vaccinated_sets"):
        return history.vaccinated_sets()
    return [frozenset(s) for s in history]


def _set_size(history, sets):
    size = getattr(history, "vaccinated_count", None)
    if size is None:
        size = len(sets[0]) if sets else 0
    if size == 0:
        raise UndefinedStatisticError("no vaccinated nodes: overlap ratios are undefined")
    return size


def recurrence(history, lag):
    """Q_lag(S) = |V_S ∩ V_{S-lag}| / vN for S = lag+1 .. last season."""
    if lag not in (1, 2):
        raise ParameterError(f"lag must be 1 or 2, got {lag}")
    sets = _season_sets(history)
    if len(sets) < lag + 1:
        raise ParameterError(f"Q_{lag} needs at least {lag + 1} seasons, history has {len(sets)}")
    size = _set_size(history, sets)
    return {s: len(sets[s - 1] & sets[s - 1 - lag]) / size for s in range(lag + 1, len(sets) + 1)}


def continuous_streak(history, upto):
    """A_upto(S): share of nodes vaccinated in every season S..upto, for S = 2 .. upto-1."""
    sets = _season_sets(history)
    if upto > len(sets):
        raise ParameterError(f"streak window ends at season {upto}, history has {len(sets)}")
    if upto < 3:
        raise ParameterError("streak window needs upto >= 3 (season 1 is excluded)")
    size = _set_size(history, sets)
    streak = {}
    running = sets[upto - 1]
    for s in range(upto - 1, 1, -1):
        running = running & sets[s - 1]
        streak[s] = len(running) / size
    return dict(sorted(streak.items()))


def repeat_frequency(history, upto):
    """F_upto(i): share of ever-vaccinated nodes (seasons 2..upto) vaccinated exactly i times."""
    sets = _season_sets(history)
    if upto > len(sets):
        raise ParameterError(f"frequency window ends at season {upto}, history has {len(sets)}")
    if upto < 3:
        raise ParameterError("frequency window needs upto >= 3 (season 1 is excluded)")
    times = Counter(node for members in sets[1:upto] for node in members)
    if not times:
        raise UndefinedStatisticError(f"no node was vaccinated in seasons 2..{upto}")
    tally = Counter(times.values())
    return {i: tally.get(i, 0) / len(times) for i in range(1, upto)}


def recurrence_report(history, upto=None):
    """Every overlap statistic the history is long enough for."""
    seasons = len(_season_sets(history))
    upto = seasons if upto is None else upto
    return RecurrenceReport(
        q1=recurrence(history, 1) if seasons >= 2 else {},
        q2=recurrence(history, 2) if seasons >= 3 else {},
        a_streak=continuous_streak(history, upto) if upto >= 3 else {},
        f_repeat=repeat_frequency(history, upto) if upto >= 3 else {},
        upto=upto,
    )
