"""
Quick Run Script - reproduces the theory-vs-simulation check on the sample BA graph
"""

import os
import subprocess
import sys

from network.datasets import data_dir

if __name__ == "__main__":
    sample = data_dir() / "ba_100.txt"
    if not os.path.exists(sample):
        print("⚠️  Sample networks not found! Please run create_networks.py first")
        sys.exit(1)
    print("🚀 Starting theory-vs-simulation preset...")
    result = subprocess.run([sys.executable, "app.py", "preset", "theory-vs-simulation",
                             "--network", str(sample), "--out-dir", "results/quick"])
    sys.exit(result.returncode)
