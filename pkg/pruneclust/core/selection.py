"""
Choosing the subtree size with the Gap statistic.

W_k is the dispersion of the weakest-link subtree selected for k; the
reference distribution is uniform over each feature's observed range.
"""

import logging
import math
from functools import partial
from typing import List, Optional, Sequence

import numpy as np

from pruneclust.config import settings
from pruneclust.core.dendrogram import build_tree
from pruneclust.core.loss import node_losses, normalized_dispersion
from pruneclust.core.parallel import run_ordered, sub_seed
from pruneclust.core.pruning import select_for_k, weakest_link_sequence
from pruneclust.errors import DegenerateDispersionError, DomainError
from pruneclust.models.data import DataMatrix
from pruneclust.schemas.pruning import SizePolicy
from pruneclust.schemas.selection import GapCurve, SelectionRule

logger = logging.getLogger(__name__)


def reference_sample(data: DataMatrix, rng_seed: int) -> DataMatrix:
    rng = np.random.default_rng(rng_seed)
    low = data.values.min(axis=0)
    high = data.values.max(axis=0)
    return DataMatrix(rng.uniform(low, high, size=(data.n, data.p)))


def log_dispersions(
    data: DataMatrix,
    k_values: Sequence[int],
    size_policy: SizePolicy = SizePolicy.NEAREST_UP,
    normalized: bool = False,
) -> List[Optional[float]]:
    """log W_k along the weakest-link sequence of one dataset; None where skipped."""
    tree = build_tree(data)
    table = node_losses(data, tree)
    sequence = weakest_link_sequence(tree, table)
    out: List[Optional[float]] = []
    for k in k_values:
        step = select_for_k(sequence, k, size_policy)
        if step is None:
            out.append(None)
            continue
        w = normalized_dispersion(table, step.frontier) if normalized else step.loss_r
        if w <= 0:
            raise DegenerateDispersionError(k)
        out.append(math.log(w))
    return out


def _reference_log_dispersions(index: int, data: DataMatrix, rng_seed: int, k_values, size_policy, normalized):
    reference = reference_sample(data, sub_seed(rng_seed, index))
    return log_dispersions(reference, k_values, size_policy, normalized)


def gap_curve(
    data: DataMatrix,
    k_max: int,
    b: int,
    rng_seed: int,
    size_policy: SizePolicy = SizePolicy.NEAREST_UP,
    normalized: Optional[bool] = None,
    threads: Optional[int] = None,
) -> GapCurve:
    if not 2 <= k_max <= data.n:
        raise DomainError(f"k_max must lie in [2, {data.n}], got {k_max}")
    if b < 1:
        raise DomainError(f"at least one reference dataset is needed, got b={b}")
    normalized = settings.GAP_NORMALIZED if normalized is None else normalized
    size_policy = SizePolicy(size_policy)
    k_values = list(range(1, k_max + 1))

    log_w = log_dispersions(data, k_values, size_policy, normalized)
    job = partial(
        _reference_log_dispersions,
        data=data,
        rng_seed=rng_seed,
        k_values=k_values,
        size_policy=size_policy,
        normalized=normalized,
    )
    reference = np.array(
        [[np.nan if v is None else v for v in row] for row in run_ordered(job, range(b), threads)],
        dtype=float,
    ).reshape(b, len(k_values))

    elog_w_ref, se, gap = [], [], []
    for column, observed in zip(reference.T, log_w):
        present = column[~np.isnan(column)]
        if present.size == 0:
            elog_w_ref.append(None)
            se.append(None)
            gap.append(None)
            continue
        mean = float(present.mean())
        sd = float(np.sqrt(np.mean((present - mean) ** 2)))
        elog_w_ref.append(mean)
        se.append(sd * math.sqrt(1.0 + 1.0 / present.size))
        gap.append(None if observed is None else mean - observed)

    logger.debug("gap curve over k=1..%d with %d references: %s", k_max, b, gap)
    return GapCurve(
        k_values=k_values,
        log_w=log_w,
        elog_w_ref=elog_w_ref,
        gap=gap,
        se=se,
        b=b,
        seed=rng_seed,
        size_policy=size_policy,
    )


def choose_k(curve: GapCurve, rule: SelectionRule = SelectionRule.ARGMAX_GAP) -> int:
    usable = [(k, g) for k, g in zip(curve.k_values, curve.gap) if g is not None]
    if not usable:
        raise DomainError("gap curve has no evaluated cluster counts")
    best_k, best_gap = usable[0]
    for k, g in usable[1:]:
        if g > best_gap:
            best_k, best_gap = k, g
    if SelectionRule(rule) == SelectionRule.ARGMAX_GAP:
        return best_k

    for i in range(len(curve.k_values) - 1):
        gap_k, gap_next, se_next = curve.gap[i], curve.gap[i + 1], curve.se[i + 1]
        if gap_k is None or gap_next is None or se_next is None:
            continue
        if gap_k >= gap_next - se_next:
            return curve.k_values[i]
    return best_k
