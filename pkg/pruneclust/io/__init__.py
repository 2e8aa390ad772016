from .datasets import dataset_frame, read_dataset, write_dataset
from .dendrogram_file import dendrogram_from_json, dendrogram_to_json, read_dendrogram, write_dendrogram
from .reports import (
    COMPARE_COLUMNS, GAP_COLUMNS, partition_rows, rows_to_csv, run_info, sequence_payload,
    summarize_compare, to_json, write_rows_csv, write_json,
)

__all__ = [
    "dataset_frame", "read_dataset", "write_dataset",
    "dendrogram_from_json", "dendrogram_to_json", "read_dendrogram", "write_dendrogram",
    "COMPARE_COLUMNS", "GAP_COLUMNS", "partition_rows", "rows_to_csv", "run_info", "sequence_payload",
    "summarize_compare", "to_json", "write_rows_csv", "write_json",
]
