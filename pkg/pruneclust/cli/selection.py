from pathlib import Path
from typing import Optional

import typer

from pruneclust.cli.common import DATA_ARG, LABEL_COLUMN_OPT, NO_HEADER_OPT, emit, ensure_dir, handle_errors, load_dataset
from pruneclust.config import settings
from pruneclust.core.selection import choose_k, gap_curve
from pruneclust.io.reports import GAP_COLUMNS, run_info, write_rows_csv, write_json
from pruneclust.schemas.pruning import SizePolicy
from pruneclust.schemas.selection import SelectionRule


@handle_errors
def gap(
    data: Path = DATA_ARG,
    kmax: int = typer.Option(10, "--kmax", help="Largest cluster count evaluated"),
    b: Optional[int] = typer.Option(None, "--B", help="Reference datasets (default PRUNECLUST_GAP_REFERENCES)"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Reference RNG seed"),
    rule: SelectionRule = typer.Option(SelectionRule.ARGMAX_GAP, "--rule", help="How k is read off the curve"),
    policy: SizePolicy = typer.Option(SizePolicy.NEAREST_UP, "--policy", help="Handling of sizes the sequence skips"),
    normalized: bool = typer.Option(
        settings.GAP_NORMALIZED, "--normalized/--pairwise", help="Use sum of R(t)/n_t instead of R(T) for W_k"
    ),
    threads: Optional[int] = typer.Option(None, "--threads", help="Worker processes (0 = all cores)"),
    out_dir: Optional[Path] = typer.Option(None, "--out-dir", help="Write gap.csv and gap_summary.json here"),
    label_column: Optional[str] = LABEL_COLUMN_OPT,
    no_header: bool = NO_HEADER_OPT,
):
    """Estimate the number of clusters with the Gap statistic over the weakest-link sequence."""
    b = settings.GAP_REFERENCES if b is None else b
    seed = settings.DEFAULT_SEED if seed is None else seed
    matrix, _ = load_dataset(data, label_column, no_header)
    curve = gap_curve(matrix, kmax, b, seed, policy, normalized=normalized, threads=threads)
    chosen = choose_k(curve, rule)

    flags = {
        "data": data, "kmax": kmax, "B": b, "rule": rule, "policy": policy,
        "normalized": normalized, "out_dir": out_dir,
    }
    summary = {"run": run_info("gap", flags, seed), "chosen_k": chosen, "rule": rule, "curve": curve.rows()}
    if out_dir is not None:
        ensure_dir(out_dir)
        write_rows_csv(curve.rows(), GAP_COLUMNS, out_dir / "gap.csv")
        write_json(summary, out_dir / "gap_summary.json")
    emit(summary)
