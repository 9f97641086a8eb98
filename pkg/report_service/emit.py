import io
import json
from typing import Dict, List, Optional, Sequence

import pandas as pd

from .models import CategorySummary, DatasetSummary

CSV_COLUMNS = ["dataset", "n", "em", "info_think", "think_answer", "think_search", "format_valid"]

REPORT_FORMATS = ["json", "csv", "text"]


def format_number(value: Optional[float]) -> str:
    """Canonical report number: at most 4 decimals, at least one; '' when undefined"""
    if value is None:
        return ""
    text = f"{value:.4f}".rstrip("0")
    if text.endswith("."):
        text += "0"
    if text == "-0.0":
        text = "0.0"
    return text


def summary_rows(summaries: Sequence[DatasetSummary]) -> List[Dict[str, str]]:
    return [
        {
            "dataset": summary.dataset,
            "n": str(summary.n),
            "em": format_number(summary.em_mean),
            "info_think": format_number(summary.info_think_mean),
            "think_answer": format_number(summary.think_answer_mean),
            "think_search": format_number(summary.think_search_mean),
            "format_valid": format_number(summary.format_valid_rate),
        }
        for summary in summaries
    ]


def rows_to_csv(rows: Sequence[Dict[str, str]]) -> bytes:
    frame = pd.DataFrame(list(rows), columns=CSV_COLUMNS, dtype=str)
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, lineterminator="\n")
    return buffer.getvalue().encode("utf-8")


def parse_summary_csv(data: bytes) -> List[Dict[str, str]]:
    """Read a summary CSV back as string rows (undefined cells stay '')"""
    frame = pd.read_csv(io.BytesIO(data), dtype=str, keep_default_na=False)
    return frame.to_dict(orient="records")


def _text_table(rows: Sequence[Dict[str, str]]) -> bytes:
    frame = pd.DataFrame(list(rows), columns=CSV_COLUMNS, dtype=str).replace("", "-")
    if frame.empty:
        return ("  ".join(CSV_COLUMNS) + "\n").encode("utf-8")
    return (frame.to_string(index=False) + "\n").encode("utf-8")


def emit(summaries: Sequence[DatasetSummary], fmt: str = "csv") -> bytes:
    """Render dataset summaries as json, csv or an aligned text table"""
    if fmt == "json":
        payload = [summary.model_dump(mode="json") for summary in summaries]
        return (json.dumps(payload, indent=2, sort_keys=True) + "\n").encode("utf-8")
    if fmt == "csv":
        return rows_to_csv(summary_rows(summaries))
    if fmt == "text":
        return _text_table(summary_rows(summaries))
    raise ValueError(f"unknown report format {fmt!r}; choose from {', '.join(REPORT_FORMATS)}")


def emit_categories(categories: Sequence[CategorySummary]) -> bytes:
    payload = [category.model_dump(mode="json") for category in categories]
    return (json.dumps(payload, indent=2, sort_keys=True) + "\n").encode("utf-8")
