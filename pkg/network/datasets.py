"""Reference statistics of the four real networks the toolkit is benchmarked on.

Values are as tabulated for the SNAP releases with directed links treated as
undirected. ``vc_beta_010`` / ``vc_beta_005`` are the published uniform
immunization thresholds at beta = 0.1 and 0.05.
"""
import os
from dataclasses import dataclass
from pathlib import Path


@dataclass(frozen=True)
class ReferenceNetwork:
    name: str
    node_count: int
    clustering: float
    mean_degree: float
    mean_sq_degree: float
    vc_beta_010: float
    vc_beta_005: float
    filename: str


REFERENCE_NETWORKS = (
    ReferenceNetwork("Wiki-Vote", 7115, 0.14, 29.4, 4554.8, 0.935, 0.870, "Wiki-Vote.txt"),
    ReferenceNetwork("Epinions", 75879, 0.14, 16.4, 3172.1, 0.955, 0.909, "soc-Epinions1.txt"),
    ReferenceNetwork("Slashdot", 77360, 0.06, 23.5, 6428.8, 0.963, 0.927, "soc-Slashdot0811.txt"),
    ReferenceNetwork("Enron", 36692, 0.50, 22.5, 6812.1, 0.967, 0.934, "Email-Enron.txt"),
)


def reference_networks():
    return {ref.name: ref for ref in REFERENCE_NETWORKS}


def data_dir():
    return Path(os.getenv("IMMUNIZE_DATA_DIR", "data/networks"))


def dataset_path(name):
    """Local path of a reference dataset, or None when it has not been downloaded."""
    ref = reference_networks()[name]
    override = os.getenv(f"IMMUNIZE_{name.upper().replace('-', '_')}")
    path = Path(override) if override else data_dir() / ref.filename
    return path if path.exists() else None
