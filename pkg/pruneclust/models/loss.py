from dataclasses import dataclass
from typing import Dict, Iterable

import numpy as np

from pruneclust.models.dendrogram import Dendrogram, NodeRef


@dataclass(frozen=True, eq=False)
class NodeStats:
    """Sufficient statistics of one node.

    loss_r is the sum over unordered member pairs of squared Euclidean
    distance; sum_x and sum_sq make the parent's loss an O(p) merge.
    """

    node: NodeRef
    size: int
    loss_r: float
    sum_x: np.ndarray
    sum_sq: float

    @property
    def wss(self) -> float:
        return self.loss_r / self.size


@dataclass(frozen=True, eq=False)
class LossTable:
    tree: Dendrogram
    stats: Dict[NodeRef, NodeStats]

    def __getitem__(self, node: NodeRef) -> NodeStats:
        return self.stats[node]

    def loss(self, node: NodeRef) -> float:
        return self.stats[node].loss_r

    def size(self, node: NodeRef) -> int:
        return self.stats[node].size

    @property
    def root(self) -> NodeStats:
        return self.stats[self.tree.root]

    def nodes(self) -> Iterable[NodeRef]:
        return self.stats.keys()
