import numpy as np
import pytest

from pruneclust.core.dendrogram import build_tree, leaf_sets
from pruneclust.core.loss import frontier_loss, node_losses
from pruneclust.core.pruning import (
    dp_losses, dp_optimal, horizontal_cut_by_height, horizontal_cut_by_k, horizontal_frontier,
    horizontal_sequence, partition_of, select_for_alpha, select_for_k, weakest_link_sequence,
)
from pruneclust.core.simulate import gen_clustered, gen_null
from pruneclust.errors import DomainError, NonMonotoneHeightsError
from pruneclust.models.data import DataMatrix
from pruneclust.models.dendrogram import Dendrogram
from pruneclust.schemas.pruning import SizePolicy
from tests.oracles import best_loss_by_size, smallest_minimizer


def _nested(finer, coarser, sets) -> bool:
    return all(any(sets[f] <= sets[c] for c in coarser) for f in finer)


# Horizontal cut
def test_horizontal_cut_five_points(five_tree, five_table):
    assert horizontal_frontier(five_tree, 3) == [-3, -1, 2]
    assert frontier_loss(five_table, horizontal_frontier(five_tree, 3)) == pytest.approx(14.0)
    assert horizontal_cut_by_k(five_tree, 3).assignment == [1, 2, 3, 2, 2]
    assert horizontal_cut_by_k(five_tree, 1).assignment == [1] * 5
    assert horizontal_cut_by_k(five_tree, 5).assignment == [1, 2, 3, 4, 5]


def test_horizontal_cut_by_height(five_tree):
    assert horizontal_cut_by_height(five_tree, 2.5).k == 3
    assert horizontal_cut_by_height(five_tree, 0.0).k == 5
    assert horizontal_cut_by_height(five_tree, 100.0).k == 1
    with pytest.raises(DomainError):
        horizontal_cut_by_height(five_tree, -1.0)


def test_height_cut_refuses_non_monotone_tree():
    tree = Dendrogram(n_leaves=3, merges=((-1, -2), (1, -3)), heights=(2.0, 1.0))
    with pytest.raises(NonMonotoneHeightsError):
        horizontal_cut_by_height(tree, 1.5)


def test_horizontal_sequence(five_tree, five_table):
    assert horizontal_sequence(five_tree, five_table) == [(5, 0.0), (4, 1.0), (3, 14.0), (2, 23.0), (1, 666.0)]


@pytest.mark.parametrize("k", [0, 6])
def test_k_out_of_range(five_tree, k):
    with pytest.raises(DomainError):
        horizontal_cut_by_k(five_tree, k)


# Weakest link
def test_weakest_link_five_points(five_tree, five_table):
    sequence = weakest_link_sequence(five_tree, five_table)
    assert [(s.n_leaves, s.loss_r, s.alpha) for s in sequence.steps] == [
        (5, 0.0, 0.0), (4, 1.0, 1.0), (3, 10.0, 9.0), (2, 23.0, 13.0), (1, 666.0, 643.0),
    ]
    assert sequence.steps[2].frontier == [-5, 1, 3]
    assert partition_of(five_tree, sequence.steps[2].frontier).assignment == [1, 2, 1, 2, 3]


def test_alpha_breakpoints_match_brute_force(five_tree, five_table):
    sequence = weakest_link_sequence(five_tree, five_table)
    for step in sequence.steps:
        assert smallest_minimizer(five_tree, five_table, step.alpha) == step.frontier


def test_select_for_alpha(five_tree, five_table):
    sequence = weakest_link_sequence(five_tree, five_table)
    assert select_for_alpha(sequence, 0.0).n_leaves == 5
    assert select_for_alpha(sequence, 5.0).n_leaves == 4
    assert select_for_alpha(sequence, 9.0).n_leaves == 3
    assert select_for_alpha(sequence, 1e6).n_leaves == 1
    with pytest.raises(DomainError):
        select_for_alpha(sequence, -0.5)


def test_size_policies(non_nested_points):
    tree = build_tree(non_nested_points)
    sequence = weakest_link_sequence(tree, node_losses(non_nested_points, tree))
    assert sequence.sizes == [9, 5, 3, 2, 1]
    assert select_for_k(sequence, 4, SizePolicy.SKIP) is None
    assert select_for_k(sequence, 4, SizePolicy.NEAREST_UP).n_leaves == 5
    assert select_for_k(sequence, 3, SizePolicy.SKIP).loss_r == pytest.approx(1536.0)


def test_sequence_is_nested_and_monotone(random_data):
    for seed in range(20):
        data = random_data(seed, 30, 2)
        tree = build_tree(data)
        sequence = weakest_link_sequence(tree, node_losses(data, tree))
        sets = leaf_sets(tree)
        alphas = [step.alpha for step in sequence.steps]
        losses = [step.loss_r for step in sequence.steps]
        assert alphas == sorted(alphas)
        assert all(b >= a - 1e-9 for a, b in zip(losses, losses[1:]))
        for finer, coarser in zip(sequence.steps, sequence.steps[1:]):
            assert _nested(finer.frontier, coarser.frontier, sets)


def test_random_alpha_intervals_match_brute_force(random_data):
    for seed in range(30):
        data = random_data(100 + seed, 9, 2)
        tree = build_tree(data)
        table = node_losses(data, tree)
        steps = weakest_link_sequence(tree, table).steps
        for step, following in zip(steps, steps[1:] + [None]):
            alpha = step.alpha + 1.0 if following is None else 0.5 * (step.alpha + following.alpha)
            if following is not None and following.alpha == step.alpha:
                continue
            assert smallest_minimizer(tree, table, alpha) == step.frontier


def test_far_outlier_keeps_small_rises_apart():
    """A huge root loss must not merge the 1e-4 and 4e-4 rises into one step."""
    data = DataMatrix(np.array([0.0, 0.01, 10.0, 10.02, 1e6]))
    tree = build_tree(data)
    table = node_losses(data, tree)
    sequence = weakest_link_sequence(tree, table)
    assert sequence.sizes == [5, 4, 3, 2, 1]
    assert sequence.steps[1].alpha == pytest.approx(1e-4)
    chosen = select_for_alpha(sequence, 2e-4)
    assert chosen.frontier == [-5, -4, -3, 1]
    assert chosen.frontier == smallest_minimizer(tree, table, 2e-4)


def test_alpha_intervals_with_a_far_outlier():
    for seed in range(20):
        rng = np.random.default_rng(300 + seed)
        data = DataMatrix(np.vstack([rng.standard_normal((8, 2)) * 0.01, [[1e6, 0.0]]]))
        tree = build_tree(data)
        table = node_losses(data, tree)
        steps = weakest_link_sequence(tree, table).steps
        for step, following in zip(steps, steps[1:] + [None]):
            alpha = step.alpha + 1.0 if following is None else 0.5 * (step.alpha + following.alpha)
            if following is not None and following.alpha == step.alpha:
                continue
            assert smallest_minimizer(tree, table, alpha) == step.frontier


def test_tied_rises_collapse_together():
    """Two identical pairs far apart collapse in one step."""
    data = DataMatrix(np.array([0.0, 1.0, 100.0, 101.0]))
    tree = build_tree(data)
    sequence = weakest_link_sequence(tree, node_losses(data, tree))
    assert sequence.sizes == [4, 2, 1]
    assert sequence.steps[1].alpha == pytest.approx(1.0)


# Optimal pruning oracle
def test_dp_five_points(five_tree, five_table):
    frontier, loss = dp_optimal(five_tree, five_table, 3)
    assert frontier == [-5, 1, 3]
    assert loss == pytest.approx(10.0)
    curve = dp_losses(five_tree, five_table)
    assert [curve[k][1] for k in range(1, 6)] == [666.0, 23.0, 10.0, 1.0, 0.0]


def test_dp_not_nested_but_sequence_is(non_nested_points):
    tree = build_tree(non_nested_points)
    table = node_losses(non_nested_points, tree)
    sets = leaf_sets(tree)
    three, loss_three = dp_optimal(tree, table, 3)
    four, loss_four = dp_optimal(tree, table, 4)
    assert loss_three == pytest.approx(1536.0)
    assert loss_four == pytest.approx(784.0)
    assert {frozenset(sets[node]) for node in three} == {frozenset({1}), frozenset({2}), frozenset(range(3, 10))}
    assert not _nested(four, three, sets)

    steps = weakest_link_sequence(tree, table).steps
    for finer, coarser in zip(steps, steps[1:]):
        assert _nested(finer.frontier, coarser.frontier, sets)


def test_sequence_dp_and_enumeration_agree():
    rng = np.random.default_rng(2024)
    for _ in range(200):
        n, p = int(rng.integers(2, 13)), int(rng.integers(1, 4))
        data = DataMatrix(rng.standard_normal((n, p)))
        tree = build_tree(data)
        table = node_losses(data, tree)
        brute = best_loss_by_size(tree, table)
        curve = dp_losses(tree, table)
        for k in range(1, n + 1):
            assert curve[k][1] == pytest.approx(brute[k], rel=1e-9, abs=1e-12)
        for step in weakest_link_sequence(tree, table).steps:
            assert step.loss_r == pytest.approx(brute[step.n_leaves], rel=1e-9, abs=1e-12)
            assert dp_optimal(tree, table, step.n_leaves)[1] == pytest.approx(step.loss_r, rel=1e-9, abs=1e-12)


@pytest.mark.slow
def test_weakest_link_never_loses_to_horizontal():
    rng = np.random.default_rng(7)
    violations = 0
    for dataset in range(500):
        n, p = int(rng.integers(5, 61)), int(rng.integers(1, 11))
        seed = int(rng.integers(0, 2**31))
        if dataset % 2:
            data, _ = gen_clustered(n, p, int(rng.integers(2, 6)), seed)
        else:
            data = gen_null(n, p, seed)
        tree = build_tree(data)
        table = node_losses(data, tree)
        horizontal = dict(horizontal_sequence(tree, table))
        sequence = weakest_link_sequence(tree, table)
        for k in range(1, n + 1):
            step = select_for_k(sequence, k, SizePolicy.NEAREST_UP)
            tolerance = 1e-9 * max(1.0, horizontal[k])
            if step.n_leaves == k and step.loss_r > horizontal[k] + tolerance:
                violations += 1
            if step.n_leaves != k and horizontal[k] + tolerance < step.loss_r:
                violations += 1
    assert violations == 0
