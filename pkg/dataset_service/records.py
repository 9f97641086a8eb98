import json
from pathlib import Path
from typing import Callable, Dict, List, TypeVar

from pydantic import ValidationError

from errors import SchemaError
from judge_service.models import JudgeVerdict
from metrics_service.models import PairKey
from report_service.models import TrajectoryScores
from reward_service.models import RewardBreakdown
from .ingest import PathLike, decode_line, read_jsonl
from .models import LabelRecord

T = TypeVar("T")


def read_records(path: PathLike, load: Callable[[dict], T]) -> List[T]:
    """Load every JSONL line with ``load``; the first bad line raises SchemaError"""
    items: List[T] = []
    for number, line in read_jsonl(Path(path)):
        try:
            payload = json.loads(decode_line(line))
            if not isinstance(payload, dict):
                raise ValueError("record is not a JSON object")
            items.append(load(payload))
        except (json.JSONDecodeError, ValidationError, KeyError, ValueError) as e:
            raise SchemaError(f"{path}: line {number}: {e}", line=number) from e
    return items


def read_verdicts(path: PathLike) -> List[JudgeVerdict]:
    return read_records(path, JudgeVerdict.from_record)


def read_rewards(path: PathLike) -> List[RewardBreakdown]:
    return read_records(path, RewardBreakdown.from_record)


def read_trajectory_scores(path: PathLike) -> List[TrajectoryScores]:
    return read_records(path, TrajectoryScores.from_record)


def read_label_table(path: PathLike) -> Dict[PairKey, LabelRecord]:
    """Key -> label record; a repeated key is a schema error"""
    table: Dict[PairKey, LabelRecord] = {}
    for index, record in enumerate(read_records(path, LabelRecord.model_validate), start=1):
        if record.key in table:
            raise SchemaError(f"{path}: duplicate label for {record.key}", line=index)
        table[record.key] = record
    return table
