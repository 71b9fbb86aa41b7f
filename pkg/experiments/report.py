"""CSV output of ensemble reports."""
from __future__ import annotations

import logging
import os
from pathlib import Path

import numpy as np
import pandas as pd

logger = logging.getLogger(__name__)

COLUMNS = [
    "season",
    "strategy",
    "beta",
    "v",
    "r_inf_mean",
    "r_inf_stderr",
    "q1",
    "q2",
    "vacc_mean_degree",
    "vacc_mean_kshell",
    "vacc_mean_distance",
]
RECURRENCE_COLUMNS = ["metric", "index", "mean", "stderr"]
MEANFIELD_COLUMNS = ["season", "r_inf_sim_mean", "r_inf_sim_stderr", "r_inf_meanfield"]
FLOAT_FORMAT = "%.9g"


def write_frame(frame, path):
    """Write ``frame`` as CSV with the shared number format; creates parent directories."""
    path = Path(path)
    if path.parent and not path.parent.exists():
        os.makedirs(path.parent, exist_ok=True)
    frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, na_rep="", lineterminator="\n")
    return path


def report_frame(report):
    config = report.config
    seasons = len(report.r_mean)
    if seasons == 0:
        return pd.DataFrame(columns=COLUMNS)
    frame = pd.DataFrame({
        "season": np.arange(1, seasons + 1),
        "strategy": config.strategy,
        "beta": config.beta,
        "v": config.v,
        "r_inf_mean": report.r_mean,
        "r_inf_stderr": report.r_stderr,
        "q1": report.q1_mean,
        "q2": report.q2_mean,
        "vacc_mean_degree": report.profile_mean[:, 0],
        "vacc_mean_kshell": report.profile_mean[:, 1],
        "vacc_mean_distance": report.profile_mean[:, 2],
    })
    return frame[COLUMNS]


def recurrence_frame(report):
    rows = [("A", index, mean, report.a_stderr[index]) for index, mean in report.a_mean.items()]
    rows += [("F", index, mean, report.f_stderr[index]) for index, mean in report.f_mean.items()]
    return pd.DataFrame(rows, columns=RECURRENCE_COLUMNS)


def recurrence_path(path):
    path = Path(path)
    return path.with_name(f"{path.stem}.recurrence.csv")


def meanfield_frame(report, series):
    """Simulated and mean-field r_inf side by side, one row per season."""
    return pd.DataFrame({
        "season": np.arange(1, len(report.r_mean) + 1),
        "r_inf_sim_mean": report.r_mean,
        "r_inf_sim_stderr": report.r_stderr,
        "r_inf_meanfield": series.prevalences,
    })[MEANFIELD_COLUMNS]


def meanfield_path(path):
    path = Path(path)
    return path.with_name(f"{path.stem}.meanfield.csv")


def emit_csv(report, path):
    """Write the per-season table; add the A/F sidecar when the report has them.

    Returns the list of files written.
    """
    written = [write_frame(report_frame(report), path)]
    if report.a_mean or report.f_mean:
        written.append(write_frame(recurrence_frame(report), recurrence_path(path)))
    logger.info("Wrote %s", ", ".join(str(p) for p in written))
    return written


def read_report_csv(path):
    return pd.read_csv(path, keep_default_na=True)
