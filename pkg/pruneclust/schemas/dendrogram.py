from pydantic import BaseModel, Field, field_validator
from typing import List
from enum import Enum


class LinkageKind(str, Enum):
    AVERAGE = "average"
    SINGLE = "single"
    COMPLETE = "complete"


# On-disk dendrogram
class DendrogramFile(BaseModel):
    n_leaves: int = Field(..., ge=1, description="Number of observations")
    linkage: LinkageKind = Field(..., description="Linkage used to build the tree")
    merges: List[List[int]] = Field(..., description="Merge pairs: -i is leaf i, m is merge step m (1-based)")
    heights: List[float] = Field(..., description="Linkage distance of each merge")

    @field_validator("merges")
    @classmethod
    def merges_are_pairs(cls, value: List[List[int]]) -> List[List[int]]:
        for step, pair in enumerate(value, start=1):
            if len(pair) != 2:
                raise ValueError(f"merge {step} has {len(pair)} entries, expected 2")
        return value
