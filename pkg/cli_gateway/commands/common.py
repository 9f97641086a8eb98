import argparse
from pathlib import Path
from typing import Callable, Iterable, List, Optional, Set

import structlog

from config import JUDGE_CLIENT_TYPES, Config
from dataset_service.ingest import ingest, write_jsonl, write_sidecar
from errors import ConfigError
from metrics_service.models import AggregationPolicy, MatchScope
from reward_service.exact_match import NORMALIZERS
from reward_service.models import WEIGHT_PRESETS
from trajectory_service.models import Trajectory
from ..run_config import RunConfig, build_run_config

logger = structlog.get_logger(__name__)

Handler = Callable[[argparse.Namespace, Config], int]


def add_judge_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("judge backend")
    group.add_argument("--mock", action="store_true", help="Use the deterministic word-overlap judge")
    group.add_argument("--judge-client", choices=JUDGE_CLIENT_TYPES, help="Judge backend type")
    group.add_argument("--judge-endpoint", help="Judge endpoint URL (http and openai backends)")
    group.add_argument("--judge-model", help="Judge model name")
    group.add_argument("--parallelism", type=int, help="Maximum in-flight judge requests")
    group.add_argument("--max-attempts", type=int, help="Attempts per judge request before giving up")
    group.add_argument("--timeout", type=float, help="Per-request timeout in seconds")


def add_scoring_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("scoring")
    group.add_argument("--weights", choices=sorted(WEIGHT_PRESETS), help="Reward weight preset")
    group.add_argument("--aggregation", choices=[p.value for p in AggregationPolicy], help="Per-trajectory aggregation")
    group.add_argument("--match-scope", choices=[s.value for s in MatchScope], help="Think-Answer search scope")
    group.add_argument("--normalizer", choices=sorted(NORMALIZERS), help="Exact Match answer normalizer")


def add_run_options(parser: argparse.ArgumentParser, inputs: bool = True) -> None:
    if inputs:
        parser.add_argument("input", nargs="*", type=Path, help="Trajectory corpus JSONL file(s)")
    parser.add_argument("--config", type=Path, help="Run file (JSON or TOML)")
    parser.add_argument("--output-dir", type=Path, help="Directory for output files")


def run_config_from_args(args: argparse.Namespace, settings: Config) -> RunConfig:
    """Build the RunConfig for a command from env, --config file and flags"""
    overrides = {
        "inputs": list(args.input) if getattr(args, "input", None) else None,
        "output_dir": getattr(args, "output_dir", None),
        "weights_preset": getattr(args, "weights", None),
        "aggregation": getattr(args, "aggregation", None),
        "match_scope": getattr(args, "match_scope", None),
        "normalizer": getattr(args, "normalizer", None),
        "split": {
            "train_fraction": getattr(args, "train_fraction", None),
            "seed": getattr(args, "seed", None),
        },
    }
    judge_overrides = {
        "client_type": getattr(args, "judge_client", None),
        "endpoint": getattr(args, "judge_endpoint", None),
        "model": getattr(args, "judge_model", None),
        "parallelism": getattr(args, "parallelism", None),
        "max_attempts": getattr(args, "max_attempts", None),
        "timeout": getattr(args, "timeout", None),
    }
    return build_run_config(
        settings,
        run_file=getattr(args, "config", None),
        overrides=overrides,
        judge_overrides=judge_overrides,
        mock=getattr(args, "mock", False),
    )


def require_inputs(run: RunConfig) -> List[Path]:
    if not run.inputs:
        raise ConfigError("no input corpus given")
    return list(run.inputs)


def load_corpus(paths: Iterable[Path]) -> List[Trajectory]:
    """Ingest every corpus; bad lines go to a sidecar next to their input.

    Trajectory ids must be unique across all inputs; a repeat is a sidecar
    error for the file it appears in.
    """
    trajectories: List[Trajectory] = []
    seen_ids: Set[str] = set()
    for path in paths:
        result = ingest(path, seen_ids=seen_ids)
        if result.errors:
            target = write_sidecar(path, result.errors)
            logger.warning("ingest_errors_written", path=str(target), errors=len(result.errors))
        trajectories.extend(result.trajectories)
    return trajectories


def write_records(output_dir: Path, name: str, records: Iterable[dict], written: Optional[List[str]] = None) -> Path:
    target = output_dir / name
    write_jsonl(target, records)
    if written is not None:
        written.append(name)
    return target
