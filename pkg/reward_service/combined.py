from typing import Optional

import structlog

from errors import EmptyGoldSet
from trajectory_service.grammar import check_format
from trajectory_service.models import Trajectory
from .exact_match import exact_match
from .models import RewardBreakdown, RewardWeights

logger = structlog.get_logger(__name__)


def em_reward(trajectory: Trajectory, normalizer: str = "standard") -> int:
    """Outcome reward from the final Answer block; a missing answer earns 0"""
    answer = trajectory.final_answer()
    if answer is None:
        return 0
    try:
        return exact_match(answer.content, trajectory.golden_answers, normalizer)
    except EmptyGoldSet:
        logger.warning("empty_gold_set", trajectory_id=trajectory.id)
        return 0


def combined_reward(
    trajectory: Trajectory,
    weights: RewardWeights,
    info_think: Optional[float],
    think_answer: Optional[int],
    normalizer: str = "standard",
) -> RewardBreakdown:
    """Weighted sum of exact match and the faithfulness components.

    Undefined components (None) count as 0.

    Raises:
        InvalidWeights: a weight is negative or all weights are zero.
    """
    weights.check()

    r_em = em_reward(trajectory, normalizer)
    r_info_think = float(info_think) if info_think is not None else 0.0
    r_think_answer = int(think_answer) if think_answer is not None else 0
    format_valid = check_format(trajectory).valid

    total = (
        weights.w_em * r_em
        + weights.w_info_think * r_info_think
        + weights.w_think_answer * r_think_answer
        + weights.w_format * int(format_valid)
    )

    return RewardBreakdown(
        trajectory_id=trajectory.id,
        r_em=r_em,
        r_info_think=r_info_think,
        r_think_answer=r_think_answer,
        total=total,
        format_valid=format_valid,
    )
