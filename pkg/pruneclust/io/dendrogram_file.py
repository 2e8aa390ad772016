from pathlib import Path
from typing import Union

from pydantic import ValidationError

from pruneclust.errors import DataValidationError, StructuralError
from pruneclust.models.dendrogram import Dendrogram
from pruneclust.schemas.dendrogram import DendrogramFile


def dendrogram_to_json(tree: Dendrogram) -> str:
    merges, heights = tree.as_lists()
    document = DendrogramFile(
        n_leaves=tree.n_leaves,
        linkage=tree.linkage,
        merges=merges,
        # 17 significant digits round-trip every double
        heights=[float(f"{h:.17g}") for h in heights],
    )
    return document.model_dump_json(indent=2) + "\n"


def dendrogram_from_json(text: str) -> Dendrogram:
    try:
        document = DendrogramFile.model_validate_json(text)
    except ValidationError as exc:
        raise DataValidationError(f"malformed dendrogram file: {exc}") from exc
    try:
        return Dendrogram(
            n_leaves=document.n_leaves,
            merges=tuple(tuple(pair) for pair in document.merges),
            heights=tuple(document.heights),
            linkage=document.linkage,
        )
    except StructuralError as exc:
        raise DataValidationError(f"invalid dendrogram file: {exc.detail}") from exc


def write_dendrogram(tree: Dendrogram, path: Union[str, Path]) -> None:
    Path(path).write_text(dendrogram_to_json(tree), encoding="utf-8")


def read_dendrogram(path: Union[str, Path]) -> Dendrogram:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DataValidationError(f"cannot read dendrogram file {path}: {exc}") from exc
    return dendrogram_from_json(text)
