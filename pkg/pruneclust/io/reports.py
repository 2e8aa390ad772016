"""
Deterministic CSV/JSON emission and experiment summaries.

Every CSV has a header row and a fixed float format; JSON keys are sorted
so reruns are byte-identical.
"""

import io
import json
import math
from pathlib import Path
from typing import Any, Iterable, List, Optional, Sequence, Union

import numpy as np
import pandas as pd
from pydantic import BaseModel

from pruneclust.config import settings
from pruneclust.schemas.files import RunInfo
from pruneclust.schemas.pruning import Partition, PruneSequence
from pruneclust.schemas.simulate import CompareRow, CompareSummary, KSummary

COMPARE_COLUMNS = [
    "dataset_id", "k", "loss_horizontal", "loss_weakest", "loss_weakest_skip", "loss_dp", "rel_reduction",
]
GAP_COLUMNS = ["k", "log_w", "elog_w_ref", "gap", "se"]

_SERIES = {
    "horizontal": "loss_horizontal",
    "weakest": "loss_weakest",
    "weakest_skip": "loss_weakest_skip",
    "dp": "loss_dp",
}


def run_info(command: str, flags: dict, seed: Optional[int] = None) -> RunInfo:
    return RunInfo(command=command, flags=_plain(flags), seed=seed, version=settings.VERSION)


def _plain(value: Any) -> Any:
    if isinstance(value, BaseModel):
        return _plain(value.model_dump(mode="json"))
    if isinstance(value, dict):
        return {str(key): _plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]
    if isinstance(value, Path):
        return str(value)
    if isinstance(value, np.generic):
        return _plain(value.item())
    if hasattr(value, "value") and isinstance(getattr(value, "value"), str):
        return value.value
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def to_json(payload: Any) -> str:
    return json.dumps(_plain(payload), sort_keys=True, indent=2) + "\n"


def write_json(payload: Any, path: Union[str, Path]) -> str:
    text = to_json(payload)
    Path(path).write_text(text, encoding="utf-8")
    return text


def rows_to_csv(rows: Iterable[Any], columns: Sequence[str]) -> str:
    records = [_plain(row) for row in rows]
    frame = pd.DataFrame.from_records(records, columns=list(columns))
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, float_format=settings.FLOAT_FORMAT, lineterminator="\n")
    return buffer.getvalue()


def write_rows_csv(rows: Iterable[Any], columns: Sequence[str], path: Union[str, Path]) -> str:
    text = rows_to_csv(rows, columns)
    Path(path).write_text(text, encoding="utf-8")
    return text


def partition_rows(partition: Partition) -> List[dict]:
    """0-based row index with its cluster id."""
    return [{"row_index": row, "cluster_id": cluster_id} for row, cluster_id in enumerate(partition.assignment)]


def sequence_payload(sequence: PruneSequence) -> dict:
    return {"steps": [step.model_dump() for step in sequence.steps]}


def _log_stats(values: pd.Series):
    values = pd.to_numeric(values, errors="coerce").dropna()
    values = values[values > 0]
    if values.empty:
        return None, None
    logs = np.log(values.to_numpy(dtype=float))
    se = float(logs.std(ddof=1) / math.sqrt(logs.size)) if logs.size > 1 else None
    return float(logs.mean()), se


def summarize_compare(rows: Sequence[CompareRow]) -> CompareSummary:
    """Per-k mean and SE of log losses, and median relative reduction (skipped sizes dropped)."""
    if not rows:
        return CompareSummary(datasets=0, rows=0, skipped_rows=0, median_rel_reduction=None, per_k=[])
    frame = pd.DataFrame([row.model_dump() for row in rows])
    rel = pd.to_numeric(frame["rel_reduction"], errors="coerce")
    skip = pd.to_numeric(frame["loss_weakest_skip"], errors="coerce")

    per_k = []
    for k, group in frame.groupby("k", sort=True):
        fields = {}
        for name, column in _SERIES.items():
            mean, se = _log_stats(group[column])
            fields[f"mean_log_{name}"] = mean
            fields[f"se_log_{name}"] = se
        group_rel = rel.loc[group.index].dropna()
        per_k.append(
            KSummary(
                k=int(k),
                median_rel_reduction=float(group_rel.median()) if not group_rel.empty else None,
                skipped=int(skip.loc[group.index].isna().sum()),
                **fields,
            )
        )

    present = rel.dropna()
    return CompareSummary(
        datasets=int(frame["dataset_id"].nunique()),
        rows=len(frame),
        skipped_rows=int(skip.isna().sum()),
        median_rel_reduction=float(present.median()) if not present.empty else None,
        per_k=per_k,
    )
