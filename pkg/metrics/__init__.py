from metrics.recurrence import (
    RecurrenceReport,
    continuous_streak,
    recurrence,
    recurrence_report,
    repeat_frequency,
)
from metrics.structure import (
    NetworkBaseline,
    StructureProfile,
    VaccinatedProfile,
    network_baseline,
    vaccinated_profile,
)

__all__ = [
    "RecurrenceReport",
    "StructureProfile",
    "NetworkBaseline",
    "VaccinatedProfile",
    "recurrence",
    "continuous_streak",
    "repeat_frequency",
    "recurrence_report",
    "network_baseline",
    "vaccinated_profile",
]
