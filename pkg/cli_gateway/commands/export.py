import argparse
import json
from pathlib import Path

from config import Config
from dataset_service.export import export_labeled, write_labeled
from dataset_service.records import read_verdicts
from dataset_service.split import split
from ..manifest import build_manifest, prepare_output_dir, write_manifest
from ..pipeline import judge_corpus, judged_pairs
from .common import add_judge_options, add_run_options, load_corpus, require_inputs, run_config_from_args


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("export", help="Write labeled reward-model training examples and splits")
    add_run_options(parser)
    add_judge_options(parser)
    parser.add_argument("--verdicts", type=Path, help="Reuse a verdicts file instead of judging again")
    parser.add_argument("--teacher", help="Teacher name recorded on each example (default: judge backend id)")
    parser.add_argument("--train-fraction", type=float, help="Share of examples in the train split")
    parser.add_argument("--seed", type=int, help="Split seed")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, settings: Config) -> int:
    run_config = run_config_from_args(args, settings)
    inputs = require_inputs(run_config)
    output_dir = prepare_output_dir(run_config.output_dir)

    trajectories = load_corpus(inputs)
    pairs = judged_pairs(trajectories)
    if args.verdicts is not None:
        verdicts = read_verdicts(args.verdicts)
        inputs = [*inputs, args.verdicts]
    else:
        verdicts = judge_corpus(pairs, run_config, settings)

    examples = export_labeled(
        pairs,
        verdicts,
        source_datasets={trajectory.id: trajectory.dataset for trajectory in trajectories},
        teacher=args.teacher,
    )
    train, evaluation = split(examples, run_config.split)

    write_labeled(output_dir / "labeled.jsonl", examples)
    write_labeled(output_dir / "train.jsonl", train)
    write_labeled(output_dir / "eval.jsonl", evaluation)
    counts = {"examples": len(examples), "train": len(train), "eval": len(evaluation)}
    outputs = ["labeled.jsonl", "train.jsonl", "eval.jsonl"]
    write_manifest(output_dir, build_manifest("export", run_config, inputs, outputs, counts))

    print(json.dumps(counts, sort_keys=True))
    return 0
