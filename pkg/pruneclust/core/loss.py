"""
Within-node pairwise dispersion.

R(t) sums squared Euclidean distance over unordered pairs of members, so
R(t) = n_t * WSS(t). Parent losses come from the merge identity

    R(parent) = R(left) + R(right) + n_r*S_l + n_l*S_r - 2 <s_l, s_r>

with s the coordinate sums and S the summed squared norms.
"""

import math
from typing import Iterable

import numpy as np

from pruneclust.core.dendrogram import leaf_rows
from pruneclust.errors import DataValidationError, DomainError, StructuralError
from pruneclust.models.data import DataMatrix
from pruneclust.models.dendrogram import Dendrogram, NodeRef
from pruneclust.models.loss import LossTable, NodeStats
from pruneclust.schemas.pruning import Partition


def cross_loss(left: NodeStats, right: NodeStats) -> float:
    cross = (
        right.size * left.sum_sq
        + left.size * right.sum_sq
        - 2.0 * float(np.dot(left.sum_x, right.sum_x))
    )
    # cancellation can leave a tiny negative for coincident clusters
    return max(cross, 0.0)


def node_losses(data: DataMatrix, tree: Dendrogram) -> LossTable:
    if data.n != tree.n_leaves:
        raise DataValidationError(f"data has {data.n} rows but the dendrogram has {tree.n_leaves} leaves")
    stats = {}
    for leaf in tree.leaves():
        x = data.values[-leaf - 1]
        stats[leaf] = NodeStats(node=leaf, size=1, loss_r=0.0, sum_x=x.copy(), sum_sq=float(np.dot(x, x)))
    for step, (a, b) in enumerate(tree.merges, start=1):
        left, right = stats[a], stats[b]
        stats[step] = NodeStats(
            node=step,
            size=left.size + right.size,
            loss_r=left.loss_r + right.loss_r + cross_loss(left, right),
            sum_x=left.sum_x + right.sum_x,
            sum_sq=left.sum_sq + right.sum_sq,
        )
    return LossTable(tree=tree, stats=stats)


def validate_frontier(tree: Dendrogram, frontier: Iterable[NodeRef]) -> None:
    """Frontier nodes must partition the leaves: no overlap, no gap."""
    coverage = np.zeros(tree.n_leaves, dtype=int)
    for node in frontier:
        try:
            coverage[leaf_rows(tree, node)] += 1
        except StructuralError as exc:
            raise StructuralError(f"invalid frontier: {exc.detail}") from exc
    if np.any(coverage > 1):
        raise StructuralError(f"invalid frontier: row {int(np.argmax(coverage > 1))} is covered more than once")
    if np.any(coverage == 0):
        raise StructuralError(f"invalid frontier: row {int(np.argmax(coverage == 0))} is not covered")


def frontier_loss(table: LossTable, frontier: Iterable[NodeRef]) -> float:
    """Unchecked R(T); summed in node order so equal frontiers give identical floats."""
    return math.fsum(table.loss(node) for node in sorted(frontier))


def tree_loss(table: LossTable, frontier: Iterable[NodeRef]) -> float:
    """R(T): total dispersion over the terminal nodes of a pruned tree."""
    frontier = sorted(frontier)
    validate_frontier(table.tree, frontier)
    return frontier_loss(table, frontier)


def normalized_dispersion(table: LossTable, frontier: Iterable[NodeRef]) -> float:
    """Sum of R(t) / n_t, i.e. classical centroid WSS of the frontier."""
    frontier = sorted(frontier)
    validate_frontier(table.tree, frontier)
    return math.fsum(table.loss(node) / table.size(node) for node in frontier)


def _cluster_moments(data: DataMatrix, partition: Partition):
    if partition.n != data.n:
        raise DataValidationError(f"partition covers {partition.n} rows, data has {data.n}")
    ids = np.asarray(partition.assignment, dtype=int) - 1
    counts = np.bincount(ids, minlength=partition.k)
    if np.any(counts == 0):
        raise DataValidationError(f"cluster id {int(np.argmax(counts == 0)) + 1} has no members")
    sums = np.zeros((partition.k, data.p))
    np.add.at(sums, ids, data.values)
    means = sums / counts[:, None]
    per_cluster = np.zeros(partition.k)
    np.add.at(per_cluster, ids, ((data.values - means[ids]) ** 2).sum(axis=1))
    return counts, per_cluster


def wss_centroid(data: DataMatrix, partition: Partition) -> float:
    """Sum over clusters of squared deviations from the cluster mean."""
    _, per_cluster = _cluster_moments(data, partition)
    return math.fsum(per_cluster)


def partition_loss(data: DataMatrix, partition: Partition) -> float:
    """Pairwise loss R of an arbitrary partition, via R(t) = n_t * WSS(t)."""
    counts, per_cluster = _cluster_moments(data, partition)
    return math.fsum(counts * per_cluster)


def cost_complexity(loss_r: float, n_leaves: int, alpha: float) -> float:
    """R_alpha(T) = R(T) + alpha * |terminal nodes|."""
    if alpha < 0:
        raise DomainError(f"alpha must be nonnegative, got {alpha}")
    if n_leaves < 1:
        raise DomainError(f"a pruned tree has at least one leaf, got {n_leaves}")
    return loss_r + alpha * n_leaves
