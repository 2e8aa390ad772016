from .distances import pairwise_distances, pairwise_sq_distances
from .dendrogram import agglomerate, build_tree, leaf_rows, leaf_sets, merge_heights_monotone
from .loss import (
    cost_complexity, frontier_loss, node_losses, normalized_dispersion, partition_loss,
    tree_loss, validate_frontier, wss_centroid,
)
from .pruning import (
    dp_losses, dp_optimal, horizontal_cut_by_height, horizontal_cut_by_k, horizontal_frontier,
    horizontal_sequence, partition_of, select_for_alpha, select_for_k, weakest_link_sequence,
)
from .selection import choose_k, gap_curve, log_dispersions, reference_sample
from .simulate import cluster_sizes, compare_dataset, compare_experiment, draw_dataset, gen_clustered, gen_null
from .evaluate import adjusted_rand_index, classify_comparison, majority_vote_eval

__all__ = [
    # dendrogram-core
    "pairwise_distances", "pairwise_sq_distances", "agglomerate", "build_tree", "leaf_rows", "leaf_sets",
    "merge_heights_monotone",

    # dispersion-loss
    "cost_complexity", "frontier_loss", "node_losses", "normalized_dispersion", "partition_loss",
    "tree_loss", "validate_frontier", "wss_centroid",

    # pruning
    "dp_losses", "dp_optimal", "horizontal_cut_by_height", "horizontal_cut_by_k", "horizontal_frontier",
    "horizontal_sequence", "partition_of", "select_for_alpha", "select_for_k", "weakest_link_sequence",

    # model-selection
    "choose_k", "gap_curve", "log_dispersions", "reference_sample",

    # simulate
    "cluster_sizes", "compare_dataset", "compare_experiment", "draw_dataset", "gen_clustered", "gen_null",
    "adjusted_rand_index", "classify_comparison", "majority_vote_eval",
]
