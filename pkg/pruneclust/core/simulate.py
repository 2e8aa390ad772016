"""
Synthetic datasets and the horizontal vs weakest-link vs DP comparison.

Every replicate draws from its own generator seeded by (master seed,
replicate index), so rows come out identical for any worker count.
"""

import logging
from functools import partial
from typing import List, Optional, Tuple

import numpy as np

from pruneclust.core.dendrogram import build_tree
from pruneclust.core.loss import frontier_loss, node_losses
from pruneclust.core.parallel import run_ordered, sub_seed
from pruneclust.core.pruning import dp_losses, horizontal_sequence, select_for_k, weakest_link_sequence
from pruneclust.errors import DomainError
from pruneclust.models.data import DataMatrix
from pruneclust.schemas.pruning import SizePolicy
from pruneclust.schemas.simulate import CompareRow, DatasetDraw, SimSpec

logger = logging.getLogger(__name__)


def gen_null(n: int, p: int, seed: int) -> DataMatrix:
    """n x p iid standard normal draws."""
    if n < 1 or p < 1:
        raise DomainError(f"n and p must be positive, got n={n}, p={p}")
    rng = np.random.default_rng(seed)
    return DataMatrix(rng.standard_normal((n, p)))


def cluster_sizes(n: int, c: int) -> List[int]:
    """floor(n / c) per cluster, the last one absorbing the remainder."""
    base = n // c
    return [base] * (c - 1) + [n - base * (c - 1)]


def gen_clustered(n: int, p: int, c: int, seed: int) -> Tuple[DataMatrix, List[int]]:
    """Standard normal noise; cluster j shifted by mu_j * 1_p with mu a permutation of 1..c.

    The noise is drawn first from the same stream gen_null uses, so c=1 is
    gen_null plus one.
    """
    if n < 1 or p < 1:
        raise DomainError(f"n and p must be positive, got n={n}, p={p}")
    if not 1 <= c <= n:
        raise DomainError(f"cluster count must lie in [1, n={n}], got {c}")
    rng = np.random.default_rng(seed)
    values = rng.standard_normal((n, p))
    shifts = rng.choice(np.arange(1, c + 1), size=c, replace=False)
    labels = np.repeat(np.arange(1, c + 1), cluster_sizes(n, c))
    values += shifts[labels - 1][:, None]
    return DataMatrix(values), labels.tolist()


def draw_dataset(spec: SimSpec, replicate: int) -> Tuple[DataMatrix, Optional[List[int]], DatasetDraw]:
    rng = np.random.default_rng(sub_seed(spec.seed, replicate))
    n = int(rng.integers(spec.n_range[0], spec.n_range[1] + 1))
    p = int(rng.integers(spec.p_range[0], spec.p_range[1] + 1))
    c = None
    if spec.c_range is not None:
        c = int(rng.integers(spec.c_range[0], min(spec.c_range[1], n) + 1))
    data_seed = int(rng.integers(0, 2**63 - 1))
    draw = DatasetDraw(dataset_id=str(replicate), n=n, p=p, c=c, seed=data_seed)
    if c is None:
        return gen_null(n, p, data_seed), None, draw
    data, labels = gen_clustered(n, p, c, data_seed)
    return data, labels, draw


def compare_dataset(dataset_id: str, data: DataMatrix, k_min: int, k_max: int, with_dp: bool = False) -> List[CompareRow]:
    """One row per k in [k_min, min(k_max, n)] on an average-linkage tree."""
    if not 1 <= k_min <= k_max:
        raise DomainError(f"need 1 <= k_min <= k_max, got k_min={k_min}, k_max={k_max}")
    tree = build_tree(data)
    table = node_losses(data, tree)
    sequence = weakest_link_sequence(tree, table)
    horizontal = dict(horizontal_sequence(tree, table))
    optimal = dp_losses(tree, table) if with_dp else {}

    rows = []
    for k in range(k_min, min(k_max, data.n) + 1):
        nearest = select_for_k(sequence, k, SizePolicy.NEAREST_UP)
        exact = select_for_k(sequence, k, SizePolicy.SKIP)
        loss_h = horizontal[k]
        rel = None
        if exact is not None:
            rel = (loss_h - exact.loss_r) / loss_h if loss_h > 0 else 0.0
        rows.append(
            CompareRow(
                dataset_id=dataset_id,
                k=k,
                loss_horizontal=loss_h,
                loss_weakest=frontier_loss(table, nearest.frontier),
                loss_weakest_skip=None if exact is None else exact.loss_r,
                loss_dp=optimal[k][1] if with_dp else None,
                rel_reduction=rel,
            )
        )
    return rows


def _compare_replicate(replicate: int, spec: SimSpec, k_min: int, k_max: int, with_dp: bool) -> List[CompareRow]:
    data, _, draw = draw_dataset(spec, replicate)
    logger.debug("replicate %d: n=%d p=%d c=%s", replicate, draw.n, draw.p, draw.c)
    return compare_dataset(draw.dataset_id, data, k_min, k_max, with_dp)


def compare_experiment(
    spec: SimSpec,
    k_min: int,
    k_max: int,
    with_dp: bool = False,
    threads: Optional[int] = None,
) -> List[CompareRow]:
    if not 2 <= k_min <= k_max:
        raise DomainError(f"need 2 <= k_min <= k_max, got k_min={k_min}, k_max={k_max}")
    logger.info("comparing prunings on %d %s datasets, k in [%d, %d]", spec.replicates, spec.kind.value, k_min, k_max)
    job = partial(_compare_replicate, spec=spec, k_min=k_min, k_max=k_max, with_dp=with_dp)
    per_replicate = run_ordered(job, range(spec.replicates), threads)
    return [row for rows in per_replicate for row in rows]
