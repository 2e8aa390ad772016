from pydantic import BaseModel, Field, model_validator
from typing import Dict, List, Sequence
from enum import Enum


class SizePolicy(str, Enum):
    NEAREST_UP = "nearest_up"
    SKIP = "skip"


class PruneMethod(str, Enum):
    HORIZONTAL = "horizontal"
    WEAKEST = "weakest"
    DP = "dp"


# Partition Schemas
class Partition(BaseModel):
    assignment: List[int] = Field(..., description="Cluster id per observation, 1..k by first appearance")
    k: int = Field(..., ge=1, description="Number of clusters")

    class Config:
        frozen = True

    @model_validator(mode="after")
    def ids_in_first_appearance_order(self) -> "Partition":
        next_id = 1
        for cluster_id in self.assignment:
            if cluster_id == next_id:
                next_id += 1
            elif cluster_id > next_id or cluster_id < 1:
                raise ValueError("cluster ids must be 1..k, numbered by first appearance")
        if next_id - 1 != self.k:
            raise ValueError(f"k={self.k} but {next_id - 1} distinct clusters are assigned")
        return self

    @classmethod
    def from_labels(cls, labels: Sequence) -> "Partition":
        """Renumber arbitrary hashable labels 1..k by first appearance."""
        ids: Dict[object, int] = {}
        assignment = [ids.setdefault(label, len(ids) + 1) for label in labels]
        return cls(assignment=assignment, k=len(ids))

    @property
    def n(self) -> int:
        return len(self.assignment)

    def clusters(self) -> List[List[int]]:
        """Row indices of each cluster, ordered by cluster id."""
        members: List[List[int]] = [[] for _ in range(self.k)]
        for row, cluster_id in enumerate(self.assignment):
            members[cluster_id - 1].append(row)
        return members


# Weakest-link sequence Schemas
class PruneStep(BaseModel):
    n_leaves: int = Field(..., ge=1, description="Terminal node count of this subtree")
    loss_r: float = Field(..., ge=0.0, description="Total pairwise dispersion R(T)")
    alpha: float = Field(..., ge=0.0, description="Complexity parameter at which this subtree becomes optimal")
    frontier: List[int] = Field(..., description="Terminal nodes (NodeRef ids), ascending")

    class Config:
        frozen = True


class PruneSequence(BaseModel):
    steps: List[PruneStep] = Field(..., min_length=1, description="From the full tree down to the root")

    class Config:
        frozen = True

    @model_validator(mode="after")
    def sizes_decrease_alphas_increase(self) -> "PruneSequence":
        for previous, current in zip(self.steps, self.steps[1:]):
            if current.n_leaves >= previous.n_leaves:
                raise ValueError("n_leaves must be strictly decreasing")
            if current.alpha < previous.alpha:
                raise ValueError("alpha must be nondecreasing")
        if self.steps[-1].n_leaves != 1:
            raise ValueError("sequence must end at the root-only tree")
        return self

    @property
    def sizes(self) -> List[int]:
        return [step.n_leaves for step in self.steps]

    def step_for_size(self, n_leaves: int):
        for step in self.steps:
            if step.n_leaves == n_leaves:
                return step
        return None
