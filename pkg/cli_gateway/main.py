"""veritas: batch scoring of agentic-search trajectories.

Exit codes: 0 success, 1 validation or agreement failure, 2 configuration or
I/O error.
"""

import argparse
import os
import sys
from typing import List, Optional

import structlog
from pydantic import ValidationError

from config import TOOL_VERSION, get_config
from errors import AgreementError, ConfigError, DatasetError, VeritasError
from logging_config import configure_logging
from .commands import COMMANDS

logger = structlog.get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="veritas",
        description="Parse, judge and reward agentic-search trajectories",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {TOOL_VERSION}")
    parser.add_argument("--env", default=os.getenv("VERITAS_ENV"), help="development | testing | production")
    parser.add_argument("--log-level", help="Override VERITAS_LOG_LEVEL")
    parser.add_argument("--log-format", choices=["console", "json"], help="Override VERITAS_LOG_FORMAT")

    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        settings = get_config(args.env)
    except ValidationError as e:
        print(f"error: invalid VERITAS_* environment settings: {e}", file=sys.stderr)
        return EXIT_CONFIG
    configure_logging(args.log_level or settings.log_level, args.log_format or settings.log_format)

    issues = settings.validate_config()
    if issues:
        for issue in issues:
            logger.error("invalid_config", issue=issue)
            print(f"error: {issue}", file=sys.stderr)
        return EXIT_CONFIG

    try:
        return args.handler(args, settings)
    except AgreementError as e:
        logger.error("agreement_failed", command=args.command, error=str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILED
    except (ConfigError, DatasetError) as e:
        logger.error("command_failed", command=args.command, error=str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except VeritasError as e:
        logger.error("command_failed", command=args.command, error=str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
