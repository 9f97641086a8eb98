import argparse
import json
from pathlib import Path
from typing import Any, Dict, List

import structlog

from config import Config
from dataset_service.ingest import decode_record, read_jsonl
from trajectory_service.grammar import check_source_format

logger = structlog.get_logger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("validate", help="Check every corpus line against the block grammar")
    parser.add_argument("input", type=Path, help="Trajectory corpus JSONL file")
    parser.add_argument("--format", dest="report_format", choices=["jsonl", "text"], default="jsonl")
    parser.set_defaults(handler=run)


def validate_lines(path: Path) -> List[Dict[str, Any]]:
    """One report entry per non-blank line, in file order"""
    entries: List[Dict[str, Any]] = []
    for number, line in read_jsonl(path):
        record, failure = decode_record(number, line)
        if record is None:
            entries.append({"line": number, "id": failure.id, "valid": False, "violations": [], "error": failure.error})
            continue
        verdict = check_source_format(record.trajectory)
        entries.append({"line": number, "id": record.id, **verdict.to_record()})
    return entries


def _text_line(entry: Dict[str, Any]) -> str:
    label = entry["id"] or f"line {entry['line']}"
    if entry["valid"]:
        return f"{label}: ok"
    if "error" in entry:
        return f"{label}: {entry['error']}"
    problems = "; ".join(
        f"{violation['code']} at {violation['position']}" for violation in entry["violations"]
    )
    return f"{label}: {problems}"


def run(args: argparse.Namespace, settings: Config) -> int:
    entries = validate_lines(args.input)
    for entry in entries:
        if args.report_format == "text":
            print(_text_line(entry))
        else:
            print(json.dumps(entry, ensure_ascii=False, sort_keys=True))

    invalid = sum(1 for entry in entries if not entry["valid"])
    logger.info("corpus_validated", path=str(args.input), lines=len(entries), invalid=invalid)
    return 0 if invalid == 0 else 1
