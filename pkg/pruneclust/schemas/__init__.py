from .dendrogram import *
from .pruning import *
from .selection import *
from .simulate import *
from .files import *

__all__ = [
    # Dendrogram schemas
    "LinkageKind", "DendrogramFile",

    # Pruning schemas
    "SizePolicy", "PruneMethod", "Partition", "PruneStep", "PruneSequence",

    # Model selection schemas
    "SelectionRule", "GapCurve",

    # Simulation schemas
    "SimKind", "SimSpec", "DatasetDraw", "CompareRow", "KSummary", "CompareSummary", "ConfusionMatrix",

    # File schemas
    "DatasetFile", "RunInfo",
]
