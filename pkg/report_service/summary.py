import math
from typing import Dict, List, Optional, Sequence

import pandas as pd

from reward_service.models import RewardBreakdown
from .models import FAITH_COLUMNS, CategorySummary, DatasetSummary, TrajectoryScores

GENERAL_QA = ["nq", "triviaqa", "popqa"]
MULTI_HOP_QA = ["hotpotqa", "2wikimultihopqa", "2wiki", "musique", "bamboogle"]
IN_DOMAIN = ["nq", "hotpotqa"]

DATASET_CATEGORIES: Dict[str, List[str]] = {
    "general_qa": GENERAL_QA,
    "multi_hop_qa": MULTI_HOP_QA,
    "in_domain": IN_DOMAIN,
    "out_of_domain": [name for name in GENERAL_QA + MULTI_HOP_QA if name not in IN_DOMAIN],
}


def _mean(values: pd.Series) -> Optional[float]:
    # fsum keeps the result independent of record order.
    present = [float(v) for v in values.dropna()]
    if not present:
        return None
    return math.fsum(present) / len(present)


def summarize(
    breakdowns: Sequence[RewardBreakdown],
    scores: Sequence[TrajectoryScores],
) -> List[DatasetSummary]:
    """Per-dataset means of EM, faithfulness and format validity.

    Faithfulness means skip undefined scores; the zero-filled view counts
    them as 0. Summaries are sorted by dataset name.
    """
    if not scores:
        return []

    frame = pd.DataFrame([score.model_dump(exclude={"metadata"}) for score in scores])
    em = {breakdown.trajectory_id: breakdown.r_em for breakdown in breakdowns}
    frame["em"] = frame["trajectory_id"].map(em)
    for column in FAITH_COLUMNS:
        frame[column] = frame[column].astype(float)

    summaries: List[DatasetSummary] = []
    for dataset, group in frame.groupby("dataset", sort=True):
        n = len(group)
        summaries.append(
            DatasetSummary(
                dataset=str(dataset),
                n=n,
                em_mean=_mean(group["em"].fillna(0)) or 0.0,
                info_think_mean=_mean(group["info_think"]),
                think_answer_mean=_mean(group["think_answer"]),
                think_search_mean=_mean(group["think_search"]),
                format_valid_rate=_mean(group["format_valid"].astype(float)) or 0.0,
                undefined_counts={column: int(group[column].isna().sum()) for column in FAITH_COLUMNS},
                zero_filled={column: _mean(group[column].fillna(0.0)) or 0.0 for column in FAITH_COLUMNS},
            )
        )
    return summaries


def summarize_categories(summaries: Sequence[DatasetSummary]) -> List[CategorySummary]:
    """Unweighted averages of per-dataset means by dataset category, plus "all" """
    by_name = {summary.dataset.lower(): summary for summary in summaries}
    groups = dict(DATASET_CATEGORIES)
    groups["all"] = sorted(by_name)

    categories: List[CategorySummary] = []
    for category, names in groups.items():
        members = [by_name[name] for name in names if name in by_name]
        if not members:
            continue

        def average(field: str) -> Optional[float]:
            return _mean(pd.Series([getattr(member, field) for member in members], dtype=float))

        categories.append(
            CategorySummary(
                category=category,
                datasets=[member.dataset for member in members],
                em=average("em_mean"),
                info_think=average("info_think_mean"),
                think_answer=average("think_answer_mean"),
                think_search=average("think_search_mean"),
                format_valid=average("format_valid_rate"),
            )
        )
    return categories
