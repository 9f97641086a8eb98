"""Deterministic stand-in judge.

A test oracle for hermetic runs, not a faithfulness claim: the conclusion
block is labeled faithful iff it shares a content word with the premise.
"""

import re
from typing import Set

from sklearn.feature_extraction.text import ENGLISH_STOP_WORDS

from errors import TrajectoryError
from trajectory_service.parser import split_pair_text
from .models import JudgePrompt

MIN_WORD_LENGTH = 4

_WORD = re.compile(r"\w+")


def content_words(text: str) -> Set[str]:
    return {
        word
        for word in _WORD.findall(text.lower())
        if len(word) >= MIN_WORD_LENGTH and word not in ENGLISH_STOP_WORDS
    }


def mock_judge(prompt: JudgePrompt) -> str:
    try:
        blocks = split_pair_text(prompt.input_string)
    except TrajectoryError:
        return "0"
    if len(blocks) != 2:
        return "0"
    premise, conclusion = blocks
    return "1" if content_words(premise.content) & content_words(conclusion.content) else "0"
