import logging
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from pruneclust.config import settings
from pruneclust.errors import DataValidationError, DatasetParseError, EmptyInputError
from pruneclust.models.data import DataMatrix
from pruneclust.schemas.files import DatasetFile

logger = logging.getLogger(__name__)


def read_dataset(file: DatasetFile) -> Tuple[DataMatrix, Optional[List[str]]]:
    """Load a CSV of observations, optionally splitting off a label column.

    Reported line numbers count physical lines of the file, header included,
    assuming no blank lines between records.
    """
    try:
        frame = pd.read_csv(
            file.path,
            header=0 if file.has_header else None,
            dtype=str,
            keep_default_na=False,
            skipinitialspace=True,
        )
    except FileNotFoundError as exc:
        raise DataValidationError(f"dataset file not found: {file.path}") from exc
    except pd.errors.EmptyDataError as exc:
        raise EmptyInputError(f"{file.path} is empty") from exc
    except pd.errors.ParserError as exc:
        raise DatasetParseError(f"{file.path}: {exc}") from exc

    if frame.shape[0] == 0:
        raise EmptyInputError(f"{file.path} has no data rows")
    first_line = 2 if file.has_header else 1

    ragged = frame.isna().any(axis=1).to_numpy()
    if ragged.any():
        row = int(np.argmax(ragged))
        raise DatasetParseError(f"row has {int(frame.iloc[row].notna().sum())} fields, expected {frame.shape[1]}", first_line + row)

    labels = None
    if file.label_column is not None:
        column = _resolve_column(frame, file.label_column)
        labels = frame[column].astype(str).tolist()
        frame = frame.drop(columns=[column])
    if frame.shape[1] == 0:
        raise DataValidationError(f"{file.path} has no feature columns")

    values = np.empty(frame.shape, dtype=float)
    for position, column in enumerate(frame.columns):
        parsed = pd.to_numeric(frame[column], errors="coerce").to_numpy(dtype=float)
        bad = ~np.isfinite(parsed)
        if bad.any():
            row = int(np.argmax(bad))
            raise DatasetParseError(
                f"cannot use {frame[column].iloc[row]!r} in column {column!r} as a finite number", first_line + row
            )
        # object -> float goes through float(), which rounds correctly; to_numeric may be 1 ulp off
        values[:, position] = frame[column].to_numpy(dtype=object).astype(float)

    logger.debug("read %d x %d dataset from %s", values.shape[0], values.shape[1], file.path)
    return DataMatrix(values), labels


def _resolve_column(frame: pd.DataFrame, label_column):
    if isinstance(label_column, int) or (isinstance(label_column, str) and label_column not in frame.columns and label_column.isdigit()):
        index = int(label_column)
        if not 0 <= index < frame.shape[1]:
            raise DataValidationError(f"label column index {index} out of range for {frame.shape[1]} columns")
        return frame.columns[index]
    if label_column not in frame.columns:
        raise DataValidationError(f"label column {label_column!r} not found; columns are {list(frame.columns)}")
    return label_column


def dataset_frame(data: DataMatrix, labels: Optional[Sequence] = None) -> pd.DataFrame:
    """Features as x1..xp, plus a trailing `label` column when labels are given."""
    frame = pd.DataFrame(data.values, columns=[f"x{j + 1}" for j in range(data.p)])
    if labels is not None:
        if len(labels) != data.n:
            raise DataValidationError(f"data has {data.n} rows but {len(labels)} labels were given")
        frame["label"] = list(labels)
    return frame


def write_dataset(data: DataMatrix, path: Union[str, Path], labels: Optional[Sequence] = None) -> None:
    dataset_frame(data, labels).to_csv(path, index=False, float_format=settings.FLOAT_FORMAT, lineterminator="\n")
