#!/usr/bin/env python3
"""
Hit rate of the Gap statistic on four-cluster gen_clustered data.

Runs 20 replicates (c=4, n in [20, 30], p in [1, 30]) per master seed for
every setting in SETTINGS and prints how often k=4 is chosen.
"""

import sys
import os
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import numpy as np

from pruneclust.core.selection import choose_k, gap_curve
from pruneclust.core.simulate import gen_clustered
from pruneclust.schemas.pruning import SizePolicy
from pruneclust.schemas.selection import SelectionRule

# (k_max, B, rule, size policy, normalized W_k)
SETTINGS = [
    (8, 10, SelectionRule.ARGMAX_GAP, SizePolicy.NEAREST_UP, False),
    (8, 50, SelectionRule.ARGMAX_GAP, SizePolicy.NEAREST_UP, False),
    (6, 50, SelectionRule.ARGMAX_GAP, SizePolicy.NEAREST_UP, False),
    (10, 50, SelectionRule.ARGMAX_GAP, SizePolicy.NEAREST_UP, False),
    (8, 50, SelectionRule.FIRST_SE, SizePolicy.NEAREST_UP, False),
    (8, 50, SelectionRule.ARGMAX_GAP, SizePolicy.SKIP, False),
    (8, 50, SelectionRule.ARGMAX_GAP, SizePolicy.NEAREST_UP, True),
]
REPLICATES = 20
TARGET = 16


def hits(master_seed: int, k_max: int, b: int, rule: SelectionRule, policy: SizePolicy, normalized: bool) -> int:
    rng = np.random.default_rng(master_seed)
    found = 0
    for replicate in range(REPLICATES):
        n, p = int(rng.integers(20, 31)), int(rng.integers(1, 31))
        data, _ = gen_clustered(n, p, 4, int(rng.integers(0, 2**31)))
        curve = gap_curve(data, k_max, b, rng_seed=replicate, size_policy=policy, normalized=normalized)
        found += choose_k(curve, rule) == 4
    return found


def calibrate(master_seeds) -> int:
    """Print the hit count of every setting for every master seed"""
    passing = 0
    for k_max, b, rule, policy, normalized in SETTINGS:
        label = f"k_max={k_max} B={b} rule={rule.value} policy={policy.value} normalized={normalized}"
        counts = [hits(seed, k_max, b, rule, policy, normalized) for seed in master_seeds]
        mark = "✓" if min(counts) >= TARGET else "✗"
        passing += mark == "✓"
        print(f"{mark} {label}: {counts} of {REPLICATES}")
    return 0 if passing else 1


if __name__ == "__main__":
    seeds = [int(arg) for arg in sys.argv[1:]] or [20, 100, 101, 102]
    sys.exit(calibrate(seeds))
