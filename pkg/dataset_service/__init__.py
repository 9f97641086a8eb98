"""
Dataset Service Package

Corpus ingestion, keyed label files, reward-model training export and
train/eval splits.
"""

from .export import export_labeled, read_labeled, write_labeled
from .ingest import decode_line, decode_record, ingest, read_jsonl, sidecar_path, trajectory_to_record, write_jsonl, write_sidecar
from .models import IngestResult, LabeledExample, LabelRecord, SidecarEntry, SplitSpec, TrajectoryRecord
from .records import read_label_table, read_records, read_rewards, read_trajectory_scores, read_verdicts
from .split import split

__all__ = [
    "IngestResult",
    "LabelRecord",
    "LabeledExample",
    "SidecarEntry",
    "SplitSpec",
    "TrajectoryRecord",
    "decode_line",
    "decode_record",
    "export_labeled",
    "ingest",
    "read_jsonl",
    "read_label_table",
    "read_labeled",
    "read_records",
    "read_rewards",
    "read_trajectory_scores",
    "read_verdicts",
    "sidecar_path",
    "split",
    "trajectory_to_record",
    "write_jsonl",
    "write_labeled",
    "write_sidecar",
]
