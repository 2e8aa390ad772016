from . import experiments, selection, trees

__all__ = ["experiments", "selection", "trees"]
