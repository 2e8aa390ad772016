from typing import Optional


class PruneClustError(Exception):
    """Base error. `exit_code` is what the CLI returns when it escapes a command."""

    exit_code: int = 1

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class DataValidationError(PruneClustError):
    """Input data or file content violates a documented invariant"""


class DatasetParseError(DataValidationError):
    def __init__(self, detail: str, line: Optional[int] = None):
        if line is not None:
            detail = f"line {line}: {detail}"
        super().__init__(detail)
        self.line = line


class EmptyInputError(DataValidationError):
    """No observations to work with"""


class StructuralError(PruneClustError):
    """A merge list or frontier does not describe a valid tree cut"""


class NonMonotoneHeightsError(StructuralError):
    pass


class DomainError(PruneClustError):
    """Argument outside its admissible range"""


class DegenerateDispersionError(DomainError):
    def __init__(self, k: int, detail: Optional[str] = None):
        super().__init__(detail or f"within-cluster dispersion is zero at k={k}; log is undefined")
        self.k = k
