from .data import DataMatrix, DistanceMatrix
from .dendrogram import Dendrogram, NodeRef, is_leaf, leaf_row
from .loss import NodeStats, LossTable

__all__ = [
    "DataMatrix", "DistanceMatrix",
    "Dendrogram", "NodeRef", "is_leaf", "leaf_row",
    "NodeStats", "LossTable",
]
