import argparse
import sys
from pathlib import Path

from config import Config
from dataset_service.records import read_rewards, read_trajectory_scores
from report_service.emit import REPORT_FORMATS, emit, emit_categories
from report_service.summary import summarize, summarize_categories
from ..manifest import write_bytes


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("report", help="Re-summarize a score output directory")
    parser.add_argument("input_dir", type=Path, help="Directory written by score or reward")
    parser.add_argument("--format", dest="report_format", choices=REPORT_FORMATS, default="text")
    parser.add_argument("--categories", action="store_true", help="Report dataset categories instead (JSON)")
    parser.add_argument("--output", type=Path, help="Write the report here instead of stdout")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, settings: Config) -> int:
    rewards = read_rewards(args.input_dir / "rewards.jsonl")
    scores = read_trajectory_scores(args.input_dir / "trajectory_scores.jsonl")

    summaries = summarize(rewards, scores)
    data = emit_categories(summarize_categories(summaries)) if args.categories else emit(summaries, args.report_format)

    if args.output is not None:
        write_bytes(args.output, data)
    else:
        sys.stdout.write(data.decode("utf-8"))
    return 0
