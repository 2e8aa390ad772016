import numpy as np
import pytest
from scipy.spatial.distance import pdist

from pruneclust.core.dendrogram import build_tree, leaf_rows
from pruneclust.core.loss import (
    cost_complexity, frontier_loss, node_losses, normalized_dispersion, partition_loss, tree_loss,
    validate_frontier, wss_centroid,
)
from pruneclust.core.pruning import partition_of
from pruneclust.errors import DataValidationError, DomainError, StructuralError
from pruneclust.models.data import DataMatrix
from pruneclust.schemas.pruning import Partition
from tests.oracles import all_prunings


def test_node_losses_five_points(five_table):
    assert five_table.loss(1) == pytest.approx(1.0)
    assert five_table.loss(2) == pytest.approx(14.0)
    assert five_table.loss(3) == pytest.approx(9.0)
    assert five_table.loss(4) == pytest.approx(666.0)
    assert five_table.loss(-5) == 0.0
    assert five_table[2].wss == pytest.approx(14.0 / 3)


def test_tree_loss_of_frontiers(five_table):
    assert tree_loss(five_table, [1, 3, -5]) == pytest.approx(10.0)
    assert tree_loss(five_table, [2, -1, -3]) == pytest.approx(14.0)
    assert tree_loss(five_table, [-1, -2, -3, -4, -5]) == 0.0


@pytest.mark.parametrize("frontier", [[1, 2, 3], [2, -1], [4, -1], [7]])
def test_invalid_frontier_rejected(five_tree, frontier):
    with pytest.raises(StructuralError):
        validate_frontier(five_tree, frontier)


def test_pairwise_loss_is_size_times_centroid_wss():
    """R(t) = n_t * WSS(t) for every node of many random trees."""
    rng = np.random.default_rng(11)
    checked = 0
    for _ in range(100):
        n, p = int(rng.integers(2, 40)), int(rng.integers(1, 6))
        data = DataMatrix(rng.standard_normal((n, p)) * rng.uniform(0.1, 100))
        tree = build_tree(data)
        table = node_losses(data, tree)
        for node in tree.internal_nodes():
            members = data.values[leaf_rows(tree, node)]
            wss = float(((members - members.mean(axis=0)) ** 2).sum())
            assert table.loss(node) == pytest.approx(len(members) * wss, rel=1e-9, abs=1e-9)
            checked += 1
    assert checked >= 1000


def test_partition_loss_matches_frontier_loss(five_points, five_tree, five_table):
    frontier = [1, 3, -5]
    partition = partition_of(five_tree, frontier)
    assert partition_loss(five_points, partition) == pytest.approx(frontier_loss(five_table, frontier))
    assert wss_centroid(five_points, partition) == pytest.approx(0.5 + 4.5)


def test_normalized_dispersion(five_table):
    assert normalized_dispersion(five_table, [2, 3]) == pytest.approx(14.0 / 3 + 4.5)


def test_partition_loss_length_mismatch(five_points):
    with pytest.raises(DataValidationError):
        partition_loss(five_points, Partition(assignment=[1, 1, 2], k=2))


def test_cost_complexity():
    assert cost_complexity(10.0, 3, 9.0) == 37.0
    assert cost_complexity(14.0, 3, 9.0) == 41.0
    assert cost_complexity(0.0, 5, 2.0) == 10.0
    with pytest.raises(DomainError):
        cost_complexity(10.0, 3, -1.0)


def test_merge_identity_matches_pair_sum():
    """R(t) from the merge identity equals the sum over unordered member pairs."""
    rng = np.random.default_rng(17)
    for _ in range(40):
        n, p = int(rng.integers(2, 25)), int(rng.integers(1, 5))
        data = DataMatrix(rng.standard_normal((n, p)) * rng.uniform(0.01, 1000))
        tree = build_tree(data)
        table = node_losses(data, tree)
        for node in tree.internal_nodes():
            members = data.values[leaf_rows(tree, node)]
            pair_sum = float(pdist(members, metric="sqeuclidean").sum())
            assert table.loss(node) == pytest.approx(pair_sum, rel=1e-9, abs=1e-12)


def test_refining_a_frontier_never_raises_the_loss(random_data):
    for seed in range(10):
        data = random_data(400 + seed, 8, 2)
        tree = build_tree(data)
        table = node_losses(data, tree)
        for frontier in all_prunings(tree):
            coarse = tree_loss(table, frontier)
            for node in frontier:
                if node < 0:
                    continue
                finer = [other for other in frontier if other != node] + list(tree.children(node))
                assert tree_loss(table, finer) <= coarse + 1e-12 * max(1.0, coarse)
