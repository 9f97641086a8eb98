import json
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Sequence

import structlog
from pydantic import ValidationError

from errors import DuplicateTrajectory, RefMismatch, SchemaError
from judge_service.models import JudgeVerdict
from judge_service.prompts import serialize_pair
from metrics_service.models import FaithfulnessPair, PairKey
from .ingest import PathLike, decode_line, read_jsonl, write_jsonl
from .models import LabeledExample

logger = structlog.get_logger(__name__)


def example_id(pair: FaithfulnessPair) -> str:
    return f"{pair.trajectory_id}:{pair.dimension.value}:{pair.pair_index}"


def export_labeled(
    pairs: Sequence[FaithfulnessPair],
    verdicts: Sequence[JudgeVerdict],
    source_datasets: Optional[Mapping[str, str]] = None,
    teacher: Optional[str] = None,
) -> List[LabeledExample]:
    """Join judged pairs into reward-model training examples.

    Unparseable verdicts are left out. ``teacher`` defaults to the backend
    that produced each verdict.

    Raises:
        RefMismatch: a verdict refers to a pair that was not given.
        DuplicateTrajectory: two given pairs share a key.
    """
    by_key: Dict[PairKey, FaithfulnessPair] = {}
    for pair in pairs:
        if pair.key in by_key:
            raise DuplicateTrajectory(pair.trajectory_id)
        by_key[pair.key] = pair
    source_datasets = source_datasets or {}

    examples: List[LabeledExample] = []
    skipped = 0
    for verdict in verdicts:
        pair = by_key.get(verdict.pair_ref.key)
        if pair is None:
            raise RefMismatch(f"verdict for {verdict.pair_ref.key} has no matching pair")
        if not verdict.parseable:
            skipped += 1
            continue
        examples.append(
            LabeledExample(
                id=example_id(pair),
                dimension=pair.dimension,
                input_string=serialize_pair(pair),
                label=verdict.label,
                source_dataset=source_datasets.get(pair.trajectory_id, "unknown"),
                teacher=teacher or verdict.backend,
            )
        )

    logger.info("labeled_examples_exported", examples=len(examples), skipped_unparseable=skipped)
    return examples


def write_labeled(path: PathLike, examples: Sequence[LabeledExample]) -> None:
    write_jsonl(path, (example.model_dump(mode="json") for example in examples))


def read_labeled(path: PathLike) -> List[LabeledExample]:
    examples: List[LabeledExample] = []
    for number, line in read_jsonl(Path(path)):
        try:
            examples.append(LabeledExample.model_validate(json.loads(decode_line(line))))
        except (UnicodeDecodeError, json.JSONDecodeError, ValidationError) as e:
            raise SchemaError(f"line {number}: {e}", line=number) from e
    return examples
