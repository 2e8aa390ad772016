from typing import Dict, Sequence

import numpy as np
import pandas as pd
from sklearn.metrics import adjusted_rand_score

from pruneclust.core.dendrogram import build_tree
from pruneclust.core.loss import frontier_loss, node_losses
from pruneclust.core.pruning import horizontal_frontier, partition_of, select_for_k, weakest_link_sequence
from pruneclust.errors import DataValidationError
from pruneclust.models.data import DataMatrix
from pruneclust.schemas.pruning import Partition, SizePolicy
from pruneclust.schemas.simulate import ConfusionMatrix


def _check_lengths(partition: Partition, true_labels: Sequence) -> None:
    if partition.n != len(true_labels):
        raise DataValidationError(f"partition covers {partition.n} observations but {len(true_labels)} labels were given")


def majority_vote_eval(partition: Partition, true_labels: Sequence) -> ConfusionMatrix:
    """Each cluster predicts its most common true label; ties go to the lexicographically first."""
    _check_lengths(partition, true_labels)
    truth = pd.Series([str(label) for label in true_labels], name="true")
    clusters = pd.Series(partition.assignment, name="cluster")
    votes = pd.crosstab(clusters, truth)
    votes = votes.reindex(columns=sorted(votes.columns))
    # idxmax returns the first maximal column, and columns are sorted
    predictions: Dict[int, str] = {int(cluster): str(label) for cluster, label in votes.idxmax(axis=1).items()}

    labels = sorted(truth.unique())
    predicted = clusters.map(predictions).rename("predicted")
    counts = pd.crosstab(truth, predicted).reindex(index=labels, columns=labels, fill_value=0)
    grid = counts.to_numpy(dtype=int)
    n = int(grid.sum())
    return ConfusionMatrix(
        labels=labels,
        counts=grid.tolist(),
        error_rate=1.0 - float(np.trace(grid)) / n,
        predictions=predictions,
    )


def adjusted_rand_index(partition: Partition, true_labels: Sequence) -> float:
    """Adjusted agreement between a partition and reference labels (1 = identical, ~0 = chance)."""
    _check_lengths(partition, true_labels)
    return float(adjusted_rand_score([str(label) for label in true_labels], partition.assignment))


def classify_comparison(data: DataMatrix, true_labels: Sequence, k: int) -> Dict[str, dict]:
    """Majority-vote classification from k-leaf horizontal and weakest-link trees."""
    if data.n != len(true_labels):
        raise DataValidationError(f"data has {data.n} rows but {len(true_labels)} labels were given")
    tree = build_tree(data)
    table = node_losses(data, tree)
    sequence = weakest_link_sequence(tree, table)
    frontiers = {
        "horizontal": horizontal_frontier(tree, k),
        "weakest": select_for_k(sequence, k, SizePolicy.NEAREST_UP).frontier,
    }
    report = {}
    for method, frontier in frontiers.items():
        partition = partition_of(tree, frontier)
        report[method] = {
            "n_leaves": len(frontier),
            "loss_r": frontier_loss(table, frontier),
            "confusion": majority_vote_eval(partition, true_labels),
        }
    return report
