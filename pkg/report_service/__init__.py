"""
Report Service Package

Per-dataset and per-category summaries of rewards and faithfulness scores.
"""

from .emit import CSV_COLUMNS, REPORT_FORMATS, emit, emit_categories, format_number, parse_summary_csv, rows_to_csv
from .models import CategorySummary, DatasetSummary, TrajectoryScores
from .summary import DATASET_CATEGORIES, summarize, summarize_categories

__all__ = [
    "CSV_COLUMNS",
    "DATASET_CATEGORIES",
    "REPORT_FORMATS",
    "CategorySummary",
    "DatasetSummary",
    "TrajectoryScores",
    "emit",
    "emit_categories",
    "format_number",
    "parse_summary_csv",
    "rows_to_csv",
    "summarize",
    "summarize_categories",
]
