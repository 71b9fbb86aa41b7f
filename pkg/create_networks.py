"""
Create the sample networks used by the quick run and the tests' desk-scale checks
"""

import os

import pandas as pd

from network.datasets import data_dir
from network.generators import generate_ba
from network.graph import write_edge_list
from network.structure import DegreeDistribution

SAMPLES = {
    "ba_100.txt": (100, 2, 1),
    "ba_1000.txt": (1000, 10, 1),
}


def write_distribution(dist, path):
    frame = pd.DataFrame({"k": dist.degrees, "p": dist.probabilities})
    with open(path, "w", encoding="utf-8") as f:
        f.write("# k P(k)\n")
        frame.to_csv(f, sep=" ", header=False, index=False, float_format="%.12g")


def create_samples(directory=None):
    directory = directory or data_dir()
    os.makedirs(directory, exist_ok=True)
    written = []
    for filename, (n, m, seed) in SAMPLES.items():
        net = generate_ba(n, m, seed)
        path = os.path.join(directory, filename)
        write_edge_list(net, path)
        print(f"✅ Created: {path} (N={net.node_count}, E={net.edge_count})")
        written.append(path)

        dist_path = os.path.join(directory, filename.replace(".txt", ".pk"))
        write_distribution(DegreeDistribution.from_network(net), dist_path)
        print(f"✅ Created: {dist_path}")
        written.append(dist_path)
    return written


if __name__ == "__main__":
    create_samples()
    print("\n✅ All sample networks created successfully!")
    print("ℹ️  Real networks (Wiki-Vote.txt, ...) go in the same directory; download them from SNAP.")
