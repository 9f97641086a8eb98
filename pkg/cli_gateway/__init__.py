"""
CLI Gateway Package

Batch command-line front end over JSONL trajectory corpora.
"""

from .main import build_parser, main
from .run_config import RunConfig, build_run_config

__all__ = ["RunConfig", "build_parser", "build_run_config", "main"]
