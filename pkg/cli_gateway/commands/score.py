import argparse
from pathlib import Path
from typing import List, Sequence

import structlog

from config import Config
from report_service.emit import emit, emit_categories
from report_service.summary import summarize, summarize_categories
from ..manifest import build_manifest, prepare_output_dir, write_bytes, write_manifest
from ..pipeline import ScoreResult, judge_corpus, judged_pairs, score_corpus
from ..run_config import RunConfig
from .common import (
    add_judge_options,
    add_run_options,
    add_scoring_options,
    load_corpus,
    require_inputs,
    run_config_from_args,
    write_records,
)

logger = structlog.get_logger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("score", help="Judge, score and summarize a trajectory corpus")
    add_run_options(parser)
    add_judge_options(parser)
    add_scoring_options(parser)
    parser.set_defaults(handler=run)


def write_score_outputs(
    command: str,
    run: RunConfig,
    result: ScoreResult,
    inputs: Sequence[Path],
    trajectories: int,
) -> bytes:
    """Write the reward, score and summary files plus the manifest.

    Returns the text-table summary for the terminal.
    """
    output_dir = prepare_output_dir(run.output_dir)
    written: List[str] = []

    write_records(output_dir, "rewards.jsonl", (r.to_record() for r in result.rewards), written)
    write_records(output_dir, "pair_scores.jsonl", (s.to_record() for s in result.pair_scores), written)
    write_records(output_dir, "trajectory_scores.jsonl", (s.to_record() for s in result.trajectory_scores), written)

    summaries = summarize(result.rewards, result.trajectory_scores)
    for fmt, name in (("csv", "summary.csv"), ("json", "summary.json"), ("text", "summary.txt")):
        write_bytes(output_dir / name, emit(summaries, fmt))
        written.append(name)
    write_bytes(output_dir / "categories.json", emit_categories(summarize_categories(summaries)))
    written.append("categories.json")

    manifest = build_manifest(
        command,
        run,
        inputs,
        written,
        counts={
            "trajectories": trajectories,
            "scored": len(result.rewards),
            "failures": result.failures,
            "pair_scores": len(result.pair_scores),
            "missing_verdicts": result.missing_verdicts,
        },
    )
    write_manifest(output_dir, manifest)
    logger.info("score_outputs_written", output_dir=str(output_dir), files=len(written) + 1)
    return emit(summaries, "text")


def run(args: argparse.Namespace, settings: Config) -> int:
    run_config = run_config_from_args(args, settings)
    inputs = require_inputs(run_config)
    prepare_output_dir(run_config.output_dir)

    trajectories = load_corpus(inputs)
    verdicts = judge_corpus(judged_pairs(trajectories), run_config, settings)
    result = score_corpus(trajectories, verdicts, run_config)

    table = write_score_outputs("score", run_config, result, inputs, len(trajectories))
    print(table.decode("utf-8"), end="")
    return 0
