import argparse
import json
import sys
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import structlog

from agreement_utils.kappa import agreement, drop_unparseable, matrix_to_csv, pairwise_matrix
from agreement_utils.models import LabelSequence
from config import Config
from dataset_service.models import LabelRecord
from dataset_service.records import read_label_table
from errors import AgreementError, ConfigError, DimensionMismatch
from judge_service.models import UNPARSEABLE
from metrics_service.models import FaithDimension, PairKey
from ..manifest import write_bytes

logger = structlog.get_logger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("agree", help="Judge agreement between keyed label files")
    parser.add_argument("labels", nargs="+", type=Path, help="PairScore or verdict JSONL files (two or more)")
    parser.add_argument("--dimension", choices=[d.value for d in FaithDimension], help="Only compare this dimension")
    parser.add_argument("--output", type=Path, help="Where to write the rater matrix CSV (more than two files)")
    parser.set_defaults(handler=run)


def align(
    tables: Sequence[Dict[PairKey, LabelRecord]], dimension: Optional[str] = None
) -> Tuple[FaithDimension, List[PairKey], List[List]]:
    """Keys shared by every table (sorted) and one label column per table.

    Raises:
        AgreementError: no shared keys.
        DimensionMismatch: shared keys span several dimensions.
    """
    shared = set(tables[0])
    for table in tables[1:]:
        shared &= set(table)
    if dimension is not None:
        shared = {key for key in shared if key[1] == dimension}

    unmatched = sum(len(table) for table in tables) - len(shared) * len(tables)
    if unmatched:
        logger.warning("unmatched_labels_dropped", count=unmatched)
    if not shared:
        raise AgreementError("the label files share no (trajectory_id, dimension, pair_index) keys")

    dimensions = sorted({key[1] for key in shared})
    if len(dimensions) > 1:
        raise DimensionMismatch(f"shared labels span {', '.join(dimensions)}; pass --dimension")

    keys = sorted(shared)
    columns = [[table[key].label for key in keys] for table in tables]
    return FaithDimension(dimensions[0]), keys, columns


def _rater(path: Path) -> str:
    return path.stem


def run(args: argparse.Namespace, settings: Config) -> int:
    if len(args.labels) < 2:
        raise ConfigError("agree needs at least two label files")

    tables = [read_label_table(path) for path in args.labels]
    dimension, keys, columns = align(tables, args.dimension)

    if len(columns) == 2:
        labels_a, labels_b, dropped = drop_unparseable(columns[0], columns[1])
        if not labels_a:
            raise AgreementError("every shared label is unparseable for at least one rater")
        report = agreement(
            LabelSequence(labels=labels_a, rater=_rater(args.labels[0]), dimension=dimension),
            LabelSequence(labels=labels_b, rater=_rater(args.labels[1]), dimension=dimension),
            dropped=dropped,
        )
        print(json.dumps(report.to_record(), indent=2, sort_keys=True))
        return 0

    kept = [i for i in range(len(keys)) if all(column[i] != UNPARSEABLE for column in columns)]
    if not kept:
        raise AgreementError("every shared label is unparseable for at least one rater")
    if len(kept) < len(keys):
        logger.warning("unparseable_labels_dropped", count=len(keys) - len(kept))
    sequences = [
        LabelSequence(labels=[int(column[i]) for i in kept], rater=_rater(path), dimension=dimension)
        for path, column in zip(args.labels, columns)
    ]
    text = matrix_to_csv(pairwise_matrix(sequences))
    if args.output is not None:
        write_bytes(args.output, text.encode("utf-8"))
    else:
        sys.stdout.write(text)
    return 0
