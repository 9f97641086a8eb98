from enum import Enum
from typing import Any, Dict, Tuple

from pydantic import BaseModel, ConfigDict, Field

from trajectory_service.models import Block


class FaithDimension(str, Enum):
    THINK_SEARCH = "think_search"
    INFO_THINK = "info_think"
    THINK_ANSWER = "think_answer"


class Provenance(str, Enum):
    REGEX = "regex"
    JUDGE = "judge"


class AggregationPolicy(str, Enum):
    MEAN = "mean"
    MIN = "min"
    ALL = "all"


class MatchScope(str, Enum):
    LAST_THINK = "last_think"
    FULL_TRAJECTORY = "full_trajectory"


PairKey = Tuple[str, str, int]


class FaithfulnessPair(BaseModel):
    """One (premise, conclusion) block unit for a faithfulness dimension"""
    model_config = ConfigDict(frozen=True)

    dimension: FaithDimension
    premise: Block
    conclusion: Block
    trajectory_id: str
    pair_index: int = Field(ge=0)

    @property
    def key(self) -> PairKey:
        return (self.trajectory_id, self.dimension.value, self.pair_index)


class PairScore(BaseModel):
    model_config = ConfigDict(frozen=True)

    pair: FaithfulnessPair
    label: int = Field(ge=0, le=1)
    provenance: Provenance

    @property
    def dimension(self) -> FaithDimension:
        return self.pair.dimension

    def to_record(self) -> Dict[str, Any]:
        return {
            "trajectory_id": self.pair.trajectory_id,
            "dimension": self.pair.dimension.value,
            "pair_index": self.pair.pair_index,
            "label": self.label,
            "provenance": self.provenance.value,
        }
