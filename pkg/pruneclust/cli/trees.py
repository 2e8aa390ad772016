"""
Single-dataset commands: build a tree, cut it, list its pruning sequence.
"""

from pathlib import Path
from typing import Optional

import typer

from pruneclust.cli.common import DATA_ARG, LABEL_COLUMN_OPT, NO_HEADER_OPT, emit, handle_errors, load_dataset
from pruneclust.core.dendrogram import build_tree
from pruneclust.core.loss import frontier_loss, node_losses
from pruneclust.core.pruning import (
    dp_optimal, horizontal_cut_by_height, horizontal_frontier, partition_of, select_for_alpha, select_for_k,
    weakest_link_sequence,
)
from pruneclust.io.dendrogram_file import dendrogram_to_json, write_dendrogram
from pruneclust.io.reports import partition_rows, run_info, sequence_payload, write_rows_csv, write_json
from pruneclust.schemas.dendrogram import LinkageKind
from pruneclust.schemas.pruning import PruneMethod, SizePolicy

LINKAGE_OPT = typer.Option(LinkageKind.AVERAGE, "--linkage", help="Linkage used to build the tree")


@handle_errors
def tree(
    data: Path = DATA_ARG,
    out: Optional[Path] = typer.Option(None, "--out", help="Write the dendrogram JSON here instead of stdout"),
    linkage: LinkageKind = LINKAGE_OPT,
    label_column: Optional[str] = LABEL_COLUMN_OPT,
    no_header: bool = NO_HEADER_OPT,
):
    """Build a dendrogram and serialize it."""
    matrix, _ = load_dataset(data, label_column, no_header)
    dendrogram = build_tree(matrix, linkage)
    if out is None:
        typer.echo(dendrogram_to_json(dendrogram), nl=False)
        return
    write_dendrogram(dendrogram, out)
    emit({
        "run": run_info("tree", {"data": data, "linkage": linkage, "out": out}),
        "n_leaves": dendrogram.n_leaves,
        "linkage": linkage,
        "heights_monotone": dendrogram.heights_monotone(),
        "out": out,
    })


def _check_target(method: PruneMethod, k: Optional[int], height: Optional[float], alpha: Optional[float]) -> None:
    given = [name for name, value in (("--k", k), ("--height", height), ("--alpha", alpha)) if value is not None]
    if len(given) != 1:
        raise typer.BadParameter("give exactly one of --k, --height, --alpha")
    if height is not None and method != PruneMethod.HORIZONTAL:
        raise typer.BadParameter("--height only applies to --method horizontal")
    if alpha is not None and method != PruneMethod.WEAKEST:
        raise typer.BadParameter("--alpha only applies to --method weakest")


@handle_errors
def prune(
    data: Path = DATA_ARG,
    method: PruneMethod = typer.Option(PruneMethod.WEAKEST, "--method", help="Pruning rule"),
    k: Optional[int] = typer.Option(None, "--k", help="Number of clusters"),
    height: Optional[float] = typer.Option(None, "--height", help="Cut height (horizontal only)"),
    alpha: Optional[float] = typer.Option(None, "--alpha", help="Complexity parameter (weakest only)"),
    policy: SizePolicy = typer.Option(SizePolicy.NEAREST_UP, "--policy", help="Handling of sizes the sequence skips"),
    out: Optional[Path] = typer.Option(None, "--out", help="Partition CSV (row_index, cluster_id)"),
    linkage: LinkageKind = LINKAGE_OPT,
    label_column: Optional[str] = LABEL_COLUMN_OPT,
    no_header: bool = NO_HEADER_OPT,
):
    """Cut the tree into one partition and report its loss."""
    _check_target(method, k, height, alpha)
    matrix, _ = load_dataset(data, label_column, no_header)
    dendrogram = build_tree(matrix, linkage)
    table = node_losses(matrix, dendrogram)
    flags = {
        "data": data, "method": method, "k": k, "height": height, "alpha": alpha,
        "policy": policy, "linkage": linkage, "out": out,
    }
    summary = {"run": run_info("prune", flags), "method": method}

    step_alpha = None
    if method == PruneMethod.HORIZONTAL:
        if height is not None:
            k = horizontal_cut_by_height(dendrogram, height).k
        frontier = horizontal_frontier(dendrogram, k)
    elif method == PruneMethod.WEAKEST:
        sequence = weakest_link_sequence(dendrogram, table)
        step = select_for_alpha(sequence, alpha) if alpha is not None else select_for_k(sequence, k, policy)
        if step is None:
            emit({**summary, "n_leaves": None, "loss_r": None, "available_sizes": sequence.sizes})
            return
        frontier, step_alpha = step.frontier, step.alpha
    else:
        frontier, _ = dp_optimal(dendrogram, table, k)

    partition = partition_of(dendrogram, frontier)
    if out is not None:
        write_rows_csv(partition_rows(partition), ["row_index", "cluster_id"], out)
    emit({
        **summary,
        "n_leaves": len(frontier),
        "loss_r": frontier_loss(table, frontier),
        "alpha": step_alpha,
        "frontier": sorted(frontier),
        "assignment": partition.assignment,
    })


@handle_errors
def sequence(
    data: Path = DATA_ARG,
    out: Optional[Path] = typer.Option(None, "--out", help="Also write the sequence JSON to this file"),
    linkage: LinkageKind = LINKAGE_OPT,
    label_column: Optional[str] = LABEL_COLUMN_OPT,
    no_header: bool = NO_HEADER_OPT,
):
    """Emit the weakest-link pruning sequence: n_leaves, loss_r, alpha and frontier per step."""
    matrix, _ = load_dataset(data, label_column, no_header)
    dendrogram = build_tree(matrix, linkage)
    steps = weakest_link_sequence(dendrogram, node_losses(matrix, dendrogram))
    payload = {"run": run_info("sequence", {"data": data, "linkage": linkage, "out": out}), **sequence_payload(steps)}
    if out is not None:
        write_json(payload, out)
    emit(payload)
