"""
Judge Service Package

Renders the faithfulness judge prompts, dispatches them to a judge backend
and parses binary verdicts.
"""

from .dispatcher import judge_pairs
from .mock import mock_judge
from .models import (
    UNPARSEABLE,
    JudgeBackendConfig,
    JudgePrompt,
    JudgeVerdict,
    PairRef,
)
from .prompts import render_prompt, serialize_pair
from .verdicts import parse_verdict

__all__ = [
    "UNPARSEABLE",
    "JudgeBackendConfig",
    "JudgePrompt",
    "JudgeVerdict",
    "PairRef",
    "judge_pairs",
    "mock_judge",
    "parse_verdict",
    "render_prompt",
    "serialize_pair",
]
