"""
Reward Service Package

Exact Match outcome reward and the weighted outcome + faithfulness reward.
"""

from .combined import combined_reward, em_reward
from .exact_match import exact_match, normalize_answer
from .models import WEIGHT_PRESETS, RewardBreakdown, RewardWeights, weights_from_preset

__all__ = [
    "WEIGHT_PRESETS",
    "RewardBreakdown",
    "RewardWeights",
    "combined_reward",
    "em_reward",
    "exact_match",
    "normalize_answer",
    "weights_from_preset",
]
