import functools
import logging
from pathlib import Path
from typing import Any, Callable, List, Optional, Tuple

import typer
from pydantic import ValidationError

from pruneclust.errors import PruneClustError
from pruneclust.io.datasets import read_dataset
from pruneclust.io.reports import to_json
from pruneclust.models.data import DataMatrix
from pruneclust.schemas.files import DatasetFile

logger = logging.getLogger(__name__)

# Options shared by every command that reads a dataset
DATA_ARG = typer.Argument(..., help="CSV dataset, one observation per row")
LABEL_COLUMN_OPT = typer.Option(None, "--label-column", help="Column name or 0-based index excluded from features")
NO_HEADER_OPT = typer.Option(False, "--no-header", help="The first line is data, not column names")


def handle_errors(command: Callable) -> Callable:
    """Report library errors on stderr and exit with their code."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except PruneClustError as exc:
            logger.debug("command failed", exc_info=True)
            typer.echo(f"error: {exc.detail}", err=True)
            raise typer.Exit(exc.exit_code)
        except ValidationError as exc:
            typer.echo(f"error: invalid arguments: {exc}", err=True)
            raise typer.Exit(1)

    return wrapper


def load_dataset(path: Path, label_column: Optional[str], no_header: bool) -> Tuple[DataMatrix, Optional[List[str]]]:
    return read_dataset(DatasetFile(path=path, has_header=not no_header, label_column=label_column))


def emit(payload: Any) -> None:
    typer.echo(to_json(payload), nl=False)


def ensure_dir(path: Path) -> Path:
    path.mkdir(parents=True, exist_ok=True)
    return path
