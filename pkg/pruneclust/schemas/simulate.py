from pydantic import BaseModel, Field, model_validator
from typing import Dict, List, Optional, Tuple
from enum import Enum


class SimKind(str, Enum):
    NULL = "null"
    CLUSTERED = "clustered"


# Simulation Schemas
class SimSpec(BaseModel):
    n_range: Tuple[int, int] = Field((30, 100), description="Inclusive bounds on observation count")
    p_range: Tuple[int, int] = Field((1, 50), description="Inclusive bounds on feature count")
    c_range: Optional[Tuple[int, int]] = Field(None, description="Inclusive bounds on cluster count; None for null data")
    replicates: int = Field(200, ge=1, description="Number of datasets")
    seed: int = Field(..., description="Master RNG seed")

    @model_validator(mode="after")
    def bounds_nonempty(self) -> "SimSpec":
        for name in ("n_range", "p_range", "c_range"):
            bounds = getattr(self, name)
            if bounds is None:
                continue
            low, high = bounds
            if low < 1 or high < low:
                raise ValueError(f"{name} must satisfy 1 <= low <= high, got {bounds}")
        if self.c_range is not None and self.c_range[1] > self.n_range[1]:
            raise ValueError("c_range upper bound exceeds n_range upper bound")
        # every drawn n must admit at least c_range[0] clusters
        if self.c_range is not None and self.c_range[0] > self.n_range[0]:
            raise ValueError(f"c_range lower bound {self.c_range[0]} exceeds n_range lower bound {self.n_range[0]}")
        return self

    @property
    def kind(self) -> SimKind:
        return SimKind.NULL if self.c_range is None else SimKind.CLUSTERED


class DatasetDraw(BaseModel):
    dataset_id: str
    n: int
    p: int
    c: Optional[int] = None
    seed: int = Field(..., description="Sub-seed the data was generated from")


class CompareRow(BaseModel):
    dataset_id: str = Field(..., description="Replicate index or dataset name")
    k: int = Field(..., ge=1, description="Requested cluster count")
    loss_horizontal: float = Field(..., description="Loss of the horizontal cut at k")
    loss_weakest: float = Field(..., description="Weakest-link loss, nearest_up policy")
    loss_weakest_skip: Optional[float] = Field(None, description="Weakest-link loss, skip policy")
    loss_dp: Optional[float] = Field(None, description="Optimal k-leaf pruning loss")
    rel_reduction: Optional[float] = Field(None, description="(horizontal - weakest_skip) / horizontal")


class KSummary(BaseModel):
    k: int
    mean_log_horizontal: Optional[float] = None
    se_log_horizontal: Optional[float] = None
    mean_log_weakest: Optional[float] = None
    se_log_weakest: Optional[float] = None
    mean_log_weakest_skip: Optional[float] = None
    se_log_weakest_skip: Optional[float] = None
    mean_log_dp: Optional[float] = None
    se_log_dp: Optional[float] = None
    median_rel_reduction: Optional[float] = None
    skipped: int = 0


class CompareSummary(BaseModel):
    datasets: int
    rows: int
    skipped_rows: int
    median_rel_reduction: Optional[float] = Field(None, description="Median over rows where k is in the sequence")
    per_k: List[KSummary]


# Classification Schemas
class ConfusionMatrix(BaseModel):
    labels: List[str] = Field(..., description="Distinct true labels, sorted")
    counts: List[List[int]] = Field(..., description="true x predicted counts")
    error_rate: float = Field(..., ge=0.0, le=1.0)
    predictions: Dict[int, str] = Field(default_factory=dict, description="Predicted label per cluster id")

    @property
    def n(self) -> int:
        return sum(sum(row) for row in self.counts)
