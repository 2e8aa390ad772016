"""
Batch commands: synthetic data, the pruning comparison and classification.
"""

import logging
from pathlib import Path
from typing import List, Optional

import typer

from pruneclust.cli.common import LABEL_COLUMN_OPT, NO_HEADER_OPT, emit, ensure_dir, handle_errors, load_dataset
from pruneclust.config import settings
from pruneclust.core.evaluate import classify_comparison
from pruneclust.core.simulate import compare_dataset, compare_experiment, draw_dataset
from pruneclust.io.datasets import write_dataset
from pruneclust.io.reports import COMPARE_COLUMNS, run_info, summarize_compare, write_rows_csv, write_json
from pruneclust.schemas.simulate import SimKind, SimSpec

logger = logging.getLogger(__name__)

MANIFEST_COLUMNS = ["dataset_id", "n", "p", "c", "seed"]


def _sim_spec(kind: SimKind, replicates: int, seed: int, n_min: int, n_max: int, p_min: int, p_max: int,
              c_min: int, c_max: int) -> SimSpec:
    return SimSpec(
        n_range=(n_min, n_max),
        p_range=(p_min, p_max),
        c_range=(c_min, c_max) if kind == SimKind.CLUSTERED else None,
        replicates=replicates,
        seed=seed,
    )


N_MIN_OPT = typer.Option(30, "--n-min", help="Smallest observation count")
N_MAX_OPT = typer.Option(100, "--n-max", help="Largest observation count")
P_MIN_OPT = typer.Option(1, "--p-min", help="Smallest feature count")
P_MAX_OPT = typer.Option(50, "--p-max", help="Largest feature count")
C_MIN_OPT = typer.Option(3, "--c-min", help="Smallest cluster count (clustered data)")
C_MAX_OPT = typer.Option(15, "--c-max", help="Largest cluster count (clustered data)")


@handle_errors
def simulate(
    kind: SimKind = typer.Option(SimKind.NULL, "--sim", help="Null or clustered Gaussian data"),
    replicates: int = typer.Option(200, "--replicates", help="Number of datasets"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Master RNG seed"),
    out_dir: Path = typer.Option(..., "--out-dir", help="Directory for dataset_<id>.csv and manifest.csv"),
    n_min: int = N_MIN_OPT,
    n_max: int = N_MAX_OPT,
    p_min: int = P_MIN_OPT,
    p_max: int = P_MAX_OPT,
    c_min: int = C_MIN_OPT,
    c_max: int = C_MAX_OPT,
):
    """Write seeded synthetic datasets; clustered ones carry a `label` column."""
    seed = settings.DEFAULT_SEED if seed is None else seed
    spec = _sim_spec(kind, replicates, seed, n_min, n_max, p_min, p_max, c_min, c_max)
    ensure_dir(out_dir)
    manifest = []
    for replicate in range(spec.replicates):
        data, labels, draw = draw_dataset(spec, replicate)
        write_dataset(data, out_dir / f"dataset_{draw.dataset_id}.csv", labels)
        manifest.append(draw)
    write_rows_csv(manifest, MANIFEST_COLUMNS, out_dir / "manifest.csv")
    emit({
        "run": run_info("simulate", {**spec.model_dump(exclude={"seed"}), "sim": kind, "out_dir": out_dir}, seed),
        "datasets": len(manifest),
        "manifest": out_dir / "manifest.csv",
    })


@handle_errors
def compare(
    kmin: int = typer.Option(2, "--kmin", help="Smallest cluster count compared"),
    kmax: int = typer.Option(25, "--kmax", help="Largest cluster count compared"),
    sim: Optional[SimKind] = typer.Option(None, "--sim", help="Compare on simulated data of this kind"),
    data: Optional[List[Path]] = typer.Option(None, "--data", help="Compare on these CSV files (repeatable)"),
    replicates: int = typer.Option(200, "--replicates", help="Simulated datasets"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Master RNG seed"),
    dp: bool = typer.Option(False, "--dp", help="Also compute the optimal k-leaf pruning"),
    out_dir: Path = typer.Option(..., "--out-dir", help="Directory for compare.csv and compare_summary.json"),
    threads: Optional[int] = typer.Option(None, "--threads", help="Worker processes (0 = all cores)"),
    n_min: int = N_MIN_OPT,
    n_max: int = N_MAX_OPT,
    p_min: int = P_MIN_OPT,
    p_max: int = P_MAX_OPT,
    c_min: int = C_MIN_OPT,
    c_max: int = C_MAX_OPT,
    label_column: Optional[str] = LABEL_COLUMN_OPT,
    no_header: bool = NO_HEADER_OPT,
):
    """Horizontal cut vs weakest-link (and optionally optimal) losses for every k in [kmin, kmax]."""
    if (sim is None) == (not data):
        raise typer.BadParameter("give either --sim or at least one --data file")
    flags = {"kmin": kmin, "kmax": kmax, "dp": dp, "out_dir": out_dir}

    if sim is not None:
        seed = settings.DEFAULT_SEED if seed is None else seed
        spec = _sim_spec(sim, replicates, seed, n_min, n_max, p_min, p_max, c_min, c_max)
        flags.update(spec.model_dump(exclude={"seed"}), sim=sim)
        rows = compare_experiment(spec, kmin, kmax, with_dp=dp, threads=threads)
    else:
        seed = None
        flags.update(data=data, label_column=label_column, no_header=no_header)
        rows = []
        for path in data:
            matrix, _ = load_dataset(path, label_column, no_header)
            logger.info("comparing prunings on %s (%d x %d)", path, matrix.n, matrix.p)
            rows.extend(compare_dataset(path.stem, matrix, kmin, kmax, with_dp=dp))

    ensure_dir(out_dir)
    write_rows_csv(rows, COMPARE_COLUMNS, out_dir / "compare.csv")
    summary = {"run": run_info("compare", flags, seed), "summary": summarize_compare(rows)}
    write_json(summary, out_dir / "compare_summary.json")
    emit(summary)


@handle_errors
def classify(
    data: Path = typer.Argument(..., help="CSV dataset with a true-label column"),
    labels: str = typer.Option(..., "--labels", help="Column name or 0-based index of the true labels"),
    k: int = typer.Option(..., "--k", help="Leaves of the pruned trees"),
    method: str = typer.Option("both", "--method", help="Only 'both' is supported: horizontal and weakest-link"),
    no_header: bool = NO_HEADER_OPT,
):
    """Majority-vote confusion matrices for the k-leaf horizontal and weakest-link trees."""
    if method != "both":
        raise typer.BadParameter("--method must be 'both'")
    matrix, true_labels = load_dataset(data, labels, no_header)
    report = classify_comparison(matrix, true_labels, k)
    emit({"run": run_info("classify", {"data": data, "labels": labels, "k": k, "method": method}), **report})
