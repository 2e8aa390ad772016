"""
Agglomerative dendrogram construction.

Naive nearest-pair scan over a dense matrix with Lance-Williams updates:
O(n^2) memory, O(n^3) time in the worst case, fine up to a few thousand
observations.
"""

import logging
from typing import Dict, FrozenSet, List

import numpy as np

from pruneclust.core.distances import pairwise_distances
from pruneclust.errors import EmptyInputError
from pruneclust.models.data import DataMatrix, DistanceMatrix
from pruneclust.models.dendrogram import Dendrogram, NodeRef
from pruneclust.schemas.dendrogram import LinkageKind

logger = logging.getLogger(__name__)


def _merge_order(a: NodeRef, b: NodeRef):
    # internal nodes first, then leaves; ascending within each group
    return tuple(sorted((a, b), key=lambda node: (node < 0, abs(node))))


def _updated_row(linkage: LinkageKind, row_i: np.ndarray, row_j: np.ndarray, size_i: int, size_j: int) -> np.ndarray:
    if linkage == LinkageKind.SINGLE:
        return np.minimum(row_i, row_j)
    if linkage == LinkageKind.COMPLETE:
        return np.maximum(row_i, row_j)
    return (size_i * row_i + size_j * row_j) / (size_i + size_j)


def agglomerate(dist: DistanceMatrix, linkage: LinkageKind = LinkageKind.AVERAGE) -> Dendrogram:
    """Merge the closest pair of current clusters until one remains.

    Equal linkage distances are resolved toward the lexicographically
    smallest (older, younger) pair, where leaves are older than every merge
    and merges age by step number.
    """
    linkage = LinkageKind(linkage)
    n = dist.n
    if n == 0:
        raise EmptyInputError("cannot build a dendrogram over zero observations")
    if n == 1:
        return Dendrogram(n_leaves=1, merges=(), heights=(), linkage=linkage)

    matrix = dist.square()
    np.fill_diagonal(matrix, np.inf)
    sizes = np.ones(n, dtype=int)
    rank = np.arange(1, n + 1)
    labels = [-(slot + 1) for slot in range(n)]
    merges, heights = [], []

    for step in range(1, n):
        height = matrix.min()
        rows, cols = np.nonzero(matrix == height)
        older = np.minimum(rank[rows], rank[cols])
        younger = np.maximum(rank[rows], rank[cols])
        best = np.lexsort((younger, older))[0]
        i, j = sorted((int(rows[best]), int(cols[best])))

        new_row = _updated_row(linkage, matrix[i], matrix[j], sizes[i], sizes[j])
        matrix[i, :] = new_row
        matrix[:, i] = new_row
        matrix[i, i] = np.inf
        matrix[j, :] = np.inf
        matrix[:, j] = np.inf

        merges.append(_merge_order(labels[i], labels[j]))
        heights.append(float(height))
        labels[i] = step
        rank[i] = n + step
        sizes[i] += sizes[j]

    tree = Dendrogram(n_leaves=n, merges=tuple(merges), heights=tuple(heights), linkage=linkage)
    if not tree.heights_monotone():
        logger.warning("%s linkage produced non-monotone merge heights", linkage.value)
    logger.debug("built %s-linkage dendrogram over %d leaves, root height %.6g", linkage.value, n, heights[-1])
    return tree


def build_tree(data: DataMatrix, linkage: LinkageKind = LinkageKind.AVERAGE) -> Dendrogram:
    return agglomerate(pairwise_distances(data), linkage)


def leaf_sets(tree: Dendrogram) -> Dict[NodeRef, FrozenSet[int]]:
    """Map every node to the 1-based leaf numbers beneath it."""
    members: Dict[NodeRef, FrozenSet[int]] = {leaf: frozenset((-leaf,)) for leaf in tree.leaves()}
    for step, (a, b) in enumerate(tree.merges, start=1):
        members[step] = members[a] | members[b]
    return members


def leaf_rows(tree: Dendrogram, node: NodeRef) -> List[int]:
    """0-based data rows beneath a node."""
    tree.check_node(node)
    rows, stack = [], [node]
    while stack:
        current = stack.pop()
        if current < 0:
            rows.append(-current - 1)
        else:
            stack.extend(tree.merges[current - 1])
    return sorted(rows)


def merge_heights_monotone(tree: Dendrogram) -> bool:
    return tree.heights_monotone()
