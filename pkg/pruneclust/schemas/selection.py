from pydantic import BaseModel, Field, model_validator
from typing import List, Optional
from enum import Enum

from pruneclust.schemas.pruning import SizePolicy


class SelectionRule(str, Enum):
    ARGMAX_GAP = "argmax"
    FIRST_SE = "first-se"


class GapCurve(BaseModel):
    k_values: List[int] = Field(..., description="Cluster counts evaluated")
    log_w: List[Optional[float]] = Field(..., description="log W_k of the data; None when the size was skipped")
    elog_w_ref: List[Optional[float]] = Field(..., description="Mean log W_k over reference datasets")
    gap: List[Optional[float]] = Field(..., description="elog_w_ref - log_w")
    se: List[Optional[float]] = Field(..., description="Standard error s_k, including sqrt(1 + 1/B)")
    b: int = Field(..., ge=1, description="Reference replicate count")
    seed: int = Field(..., description="RNG seed used for the references")
    size_policy: SizePolicy = Field(SizePolicy.NEAREST_UP, description="How absent subtree sizes were handled")

    @model_validator(mode="after")
    def lists_align(self) -> "GapCurve":
        n = len(self.k_values)
        for name in ("log_w", "elog_w_ref", "gap", "se"):
            if len(getattr(self, name)) != n:
                raise ValueError(f"{name} has {len(getattr(self, name))} entries, expected {n}")
        return self

    def rows(self) -> List[dict]:
        return [
            {"k": k, "log_w": lw, "elog_w_ref": ref, "gap": g, "se": s}
            for k, lw, ref, g, s in zip(self.k_values, self.log_w, self.elog_w_ref, self.gap, self.se)
        ]
