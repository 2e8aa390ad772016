from dataclasses import dataclass
from typing import Sequence

import numpy as np

from pruneclust.errors import DataValidationError, EmptyInputError


@dataclass(frozen=True)
class DataMatrix:
    """n observations x p features. Row i is observation x_i."""

    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=float, copy=True)
        if values.ndim == 1:
            values = values.reshape(-1, 1)
        if values.ndim != 2:
            raise DataValidationError(f"data must be 2-dimensional, got {values.ndim} dimensions")
        if values.shape[0] == 0:
            raise EmptyInputError("dataset has no observations")
        if values.shape[1] == 0:
            raise DataValidationError("dataset has no features")
        bad = np.argwhere(~np.isfinite(values))
        if bad.size:
            row, col = bad[0]
            raise DataValidationError(f"non-finite value {values[row, col]!r} at row {row}, column {col}")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[float]]) -> "DataMatrix":
        return cls(np.asarray(rows, dtype=float))

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def p(self) -> int:
        return self.values.shape[1]


@dataclass(frozen=True)
class DistanceMatrix:
    """Condensed upper-triangular distances, scipy `pdist` layout."""

    n: int
    entries: np.ndarray

    def __post_init__(self):
        entries = np.array(self.entries, dtype=float, copy=True).ravel()
        expected = self.n * (self.n - 1) // 2
        if self.n < 0 or entries.size != expected:
            raise DataValidationError(f"{entries.size} entries do not form a condensed matrix for n={self.n}")
        if entries.size and (not np.all(np.isfinite(entries)) or entries.min() < 0):
            raise DataValidationError("distances must be finite and nonnegative")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    def entry(self, i: int, j: int) -> float:
        """Distance between 0-based observations i and j."""
        if i == j:
            return 0.0
        if i > j:
            i, j = j, i
        return float(self.entries[self.n * i - i * (i + 1) // 2 + (j - i - 1)])

    def square(self) -> np.ndarray:
        matrix = np.zeros((self.n, self.n))
        if self.n > 1:
            rows, cols = np.triu_indices(self.n, k=1)
            matrix[rows, cols] = self.entries
            matrix[cols, rows] = self.entries
        return matrix
