import json
from pathlib import Path
from typing import Any, Dict, Iterable, Iterator, List, Optional, Set, Tuple, Union

import structlog
from pydantic import ValidationError

from errors import CorpusIOError, TrajectoryError
from trajectory_service.models import Trajectory
from trajectory_service.parser import parse
from .models import IngestResult, SidecarEntry, TrajectoryRecord

logger = structlog.get_logger(__name__)

PathLike = Union[str, Path]


def read_jsonl(path: PathLike) -> Iterator[Tuple[int, bytes]]:
    """Yield (line_number, raw bytes) for every non-blank line.

    Lines are left undecoded so one bad byte sequence fails only its own line.
    """
    path = Path(path)
    try:
        with path.open("rb") as handle:
            for number, line in enumerate(handle, start=1):
                if line.strip():
                    yield number, line
    except OSError as e:
        raise CorpusIOError(f"cannot read {path}: {e}") from e


def decode_line(raw: Union[str, bytes]) -> str:
    """UTF-8 text of one line; raises UnicodeDecodeError"""
    return raw if isinstance(raw, str) else raw.decode("utf-8")


def write_jsonl(path: PathLike, records: Iterable[Dict[str, Any]]) -> None:
    path = Path(path)
    try:
        with path.open("w", encoding="utf-8", newline="\n") as handle:
            for record in records:
                handle.write(json.dumps(record, ensure_ascii=False) + "\n")
    except OSError as e:
        raise CorpusIOError(f"cannot write {path}: {e}") from e


def _schema_message(error: ValidationError) -> str:
    problems = []
    for item in error.errors():
        location = ".".join(str(part) for part in item["loc"]) or "record"
        problems.append(f"{location}: {item['msg']}")
    return "; ".join(problems)


def decode_record(number: int, line: Union[str, bytes]) -> Tuple[Optional[TrajectoryRecord], Optional[SidecarEntry]]:
    """Decode and validate one corpus line; exactly one side of the result is set"""
    try:
        payload = json.loads(decode_line(line))
    except UnicodeDecodeError as e:
        return None, SidecarEntry(line=number, error=f"invalid UTF-8 at byte {e.start}: {e.reason}")
    except json.JSONDecodeError as e:
        return None, SidecarEntry(line=number, error=f"invalid JSON: {e.msg}")

    if not isinstance(payload, dict):
        return None, SidecarEntry(line=number, error="record is not a JSON object")

    try:
        return TrajectoryRecord.model_validate(payload), None
    except ValidationError as e:
        record_id = payload.get("id") if isinstance(payload.get("id"), str) else None
        return None, SidecarEntry(line=number, error=_schema_message(e), id=record_id)


def ingest(path: PathLike, seen_ids: Optional[Set[str]] = None) -> IngestResult:
    """Read a trajectory corpus, one JSON record per line.

    Lines that fail to decode, validate or parse are collected as sidecar
    entries with their line numbers instead of aborting the read. A
    trajectory id already in ``seen_ids`` (or earlier in the file) is a
    duplicate and goes to the sidecar too; pass one set across several
    files to keep ids unique over the whole run.

    Raises:
        CorpusIOError: the file cannot be read.
    """
    seen = seen_ids if seen_ids is not None else set()
    result = IngestResult()
    for number, line in read_jsonl(path):
        record, failure = decode_record(number, line)
        if record is None:
            result.errors.append(failure)
            continue
        if record.id in seen:
            result.errors.append(SidecarEntry(line=number, error=f"duplicate trajectory id {record.id!r}", id=record.id))
            continue

        try:
            trajectory = parse(
                record.trajectory,
                id=record.id,
                question=record.question,
                golden_answers=record.golden_answers,
                dataset=record.dataset,
                metadata=record.extra_fields(),
            )
        except TrajectoryError as e:
            result.errors.append(SidecarEntry(line=number, error=str(e), id=record.id))
            continue

        seen.add(record.id)
        result.trajectories.append(trajectory)

    logger.info("corpus_ingested", path=str(path), trajectories=len(result.trajectories), errors=len(result.errors))
    return result


def sidecar_path(path: PathLike) -> Path:
    path = Path(path)
    return path.with_name(path.name + ".errors.jsonl")


def write_sidecar(path: PathLike, entries: List[SidecarEntry]) -> Path:
    """Write ingestion errors alongside the input corpus"""
    target = sidecar_path(path)
    write_jsonl(target, (entry.model_dump(exclude_none=True) for entry in entries))
    return target


def trajectory_to_record(trajectory: Trajectory) -> Dict[str, Any]:
    """Echo a trajectory back in corpus form, unknown fields included"""
    record = dict(trajectory.metadata)
    record.update(
        {
            "id": trajectory.id,
            "question": trajectory.question,
            "golden_answers": list(trajectory.golden_answers),
            "trajectory": trajectory.source,
            "dataset": trajectory.dataset,
        }
    )
    return record
