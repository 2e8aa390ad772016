from pydantic import BaseModel, Field
from typing import Any, Dict, Optional, Union
from pathlib import Path


class DatasetFile(BaseModel):
    path: Path = Field(..., description="CSV file, one observation per row")
    has_header: bool = Field(True, description="First line holds column names")
    label_column: Optional[Union[int, str]] = Field(
        None, description="Column name or 0-based index holding true labels; excluded from features"
    )


class RunInfo(BaseModel):
    command: str
    flags: Dict[str, Any] = Field(default_factory=dict)
    seed: Optional[int] = None
    version: str
