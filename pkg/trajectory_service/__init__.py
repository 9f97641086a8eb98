"""
Trajectory Service Package

Parses agentic-search rollouts into think/search/information/answer blocks,
checks them against the block grammar and derives retrieval masks.
"""

from .grammar import check_format, check_kinds, check_source_format
from .mask import retrieval_mask
from .models import (
    Block,
    BlockKind,
    FormatVerdict,
    MaskSegment,
    Span,
    Trajectory,
    Violation,
    ViolationCode,
)
from .parser import parse, serialize
from .rollout_prompt import render_rollout_prompt

__all__ = [
    "Block",
    "BlockKind",
    "FormatVerdict",
    "MaskSegment",
    "Span",
    "Trajectory",
    "Violation",
    "ViolationCode",
    "check_format",
    "check_kinds",
    "check_source_format",
    "parse",
    "render_rollout_prompt",
    "retrieval_mask",
    "serialize",
]
