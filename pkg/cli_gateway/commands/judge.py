import argparse
import json

from config import Config
from ..manifest import build_manifest, prepare_output_dir, write_manifest
from ..pipeline import judge_corpus, judged_pairs
from .common import add_judge_options, add_run_options, load_corpus, require_inputs, run_config_from_args, write_records

VERDICTS_NAME = "verdicts.jsonl"


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("judge", help="Judge ThinkSearch and InfoThink pairs only")
    add_run_options(parser)
    add_judge_options(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, settings: Config) -> int:
    run_config = run_config_from_args(args, settings)
    inputs = require_inputs(run_config)
    output_dir = prepare_output_dir(run_config.output_dir)

    trajectories = load_corpus(inputs)
    verdicts = judge_corpus(judged_pairs(trajectories), run_config, settings)

    write_records(output_dir, VERDICTS_NAME, (verdict.to_record() for verdict in verdicts))
    unparseable = sum(1 for verdict in verdicts if not verdict.parseable)
    counts = {"trajectories": len(trajectories), "pairs": len(verdicts), "unparseable": unparseable}
    write_manifest(output_dir, build_manifest("judge", run_config, inputs, [VERDICTS_NAME], counts))

    print(json.dumps(counts, sort_keys=True))
    return 0
