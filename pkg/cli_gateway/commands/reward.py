import argparse
from pathlib import Path

from config import Config
from dataset_service.records import read_verdicts
from errors import ConfigError
from ..pipeline import score_corpus
from .common import add_run_options, add_scoring_options, load_corpus, require_inputs, run_config_from_args
from .score import write_score_outputs


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("reward", help="Combine an existing verdicts file with a corpus into rewards")
    add_run_options(parser)
    add_scoring_options(parser)
    parser.add_argument("--verdicts", type=Path, required=True, help="verdicts.jsonl written by the judge command")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, settings: Config) -> int:
    run_config = run_config_from_args(args, settings)
    inputs = require_inputs(run_config)
    if args.verdicts in inputs:
        raise ConfigError("the verdicts file cannot also be a corpus input")

    trajectories = load_corpus(inputs)
    verdicts = read_verdicts(args.verdicts)
    result = score_corpus(trajectories, verdicts, run_config)

    table = write_score_outputs("reward", run_config, result, [*inputs, args.verdicts], len(trajectories))
    print(table.decode("utf-8"), end="")
    return 0
