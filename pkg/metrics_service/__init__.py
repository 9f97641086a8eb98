"""
Metrics Service Package

Faithfulness pair extraction and the regex-based Think-Answer metric.
"""

from .aggregate import aggregate, aggregate_labels
from .models import (
    AggregationPolicy,
    FaithDimension,
    FaithfulnessPair,
    MatchScope,
    PairScore,
    Provenance,
)
from .pairs import extract_pairs
from .think_answer import answer_in_text, normalize_text, think_answer_score

__all__ = [
    "AggregationPolicy",
    "FaithDimension",
    "FaithfulnessPair",
    "MatchScope",
    "PairScore",
    "Provenance",
    "aggregate",
    "aggregate_labels",
    "answer_in_text",
    "extract_pairs",
    "normalize_text",
    "think_answer_score",
]
