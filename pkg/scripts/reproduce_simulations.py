#!/usr/bin/env python3
"""
Desk-scale reproduction of the pruning comparison experiments
"""

import sys
import os
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from pathlib import Path

from pruneclust.main import run_cli

# (name, extra flags) for each batch; sizes follow the full-scale study
EXPERIMENTS = [
    ("null", ["--sim", "null", "--n-min", "30", "--n-max", "100", "--p-min", "1", "--p-max", "50"]),
    ("clustered", ["--sim", "clustered", "--c-min", "3", "--c-max", "15"]),
]


def reproduce(out_root: Path, replicates: int = 200, seed: int = 2023) -> int:
    """Run every comparison batch, one output directory each"""
    for name, flags in EXPERIMENTS:
        print(f"Running {name} comparison ({replicates} datasets)...")
        code = run_cli([
            "compare", "--kmin", "2", "--kmax", "25", "--replicates", str(replicates),
            "--seed", str(seed), "--dp", "--out-dir", str(out_root / name), *flags,
        ])
        if code != 0:
            print(f"✗ {name} comparison failed with exit code {code}")
            return code
        print(f"✓ {name} results in {out_root / name}")
    return 0


if __name__ == "__main__":
    target = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("results")
    count = int(sys.argv[2]) if len(sys.argv) > 2 else 200
    sys.exit(reproduce(target, count))
