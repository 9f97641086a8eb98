import re
import string
from typing import Optional

from errors import MissingAnswer, MissingThink
from trajectory_service.models import Trajectory
from .models import FaithDimension, MatchScope, PairScore, Provenance
from .pairs import extract_pairs

_PUNCTUATION = string.punctuation


def normalize_text(text: str) -> str:
    """Lowercase, strip punctuation at token edges and collapse whitespace"""
    tokens = (token.strip(_PUNCTUATION) for token in text.lower().split())
    return " ".join(token for token in tokens if token)


def answer_pattern(answer: str) -> Optional["re.Pattern[str]"]:
    """Regex for a normalized answer: escaped characters, flexible whitespace"""
    normalized = normalize_text(answer)
    if not normalized:
        return None
    return re.compile(r"\s+".join(re.escape(token) for token in normalized.split(" ")))


def answer_in_text(answer: str, text: str) -> int:
    pattern = answer_pattern(answer)
    if pattern is None:
        return 0
    return 1 if pattern.search(normalize_text(text)) else 0


def think_answer_score(
    trajectory: Trajectory,
    match_scope: MatchScope = MatchScope.LAST_THINK,
) -> PairScore:
    """Regex Think-Answer faithfulness for the final answer.

    Raises:
        MissingAnswer: the trajectory has no Answer block.
        MissingThink: no Think block precedes the final Answer.
    """
    answer = trajectory.final_answer()
    if answer is None:
        raise MissingAnswer(f"trajectory {trajectory.id!r} has no <answer> block")

    pairs = extract_pairs(trajectory, FaithDimension.THINK_ANSWER)
    if not pairs:
        raise MissingThink(f"trajectory {trajectory.id!r} has no <think> before its answer")
    pair = pairs[0]

    if match_scope == MatchScope.FULL_TRAJECTORY:
        haystack = trajectory.source[:answer.span.start]
    else:
        haystack = pair.premise.content

    return PairScore(
        pair=pair,
        label=answer_in_text(answer.content, haystack),
        provenance=Provenance.REGEX,
    )
