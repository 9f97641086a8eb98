from typing import Any, Dict

from pydantic import BaseModel, ConfigDict

from errors import ConfigError, InvalidWeights


class RewardWeights(BaseModel):
    """Weights of the combined outcome + faithfulness reward.

    ``w_format`` is an optional additive bonus for format-valid trajectories;
    it defaults to 0.
    """
    model_config = ConfigDict(frozen=True)

    w_em: float
    w_info_think: float
    w_think_answer: float
    w_format: float = 0.0

    def check(self) -> "RewardWeights":
        values = [self.w_em, self.w_info_think, self.w_think_answer, self.w_format]
        if any(value < 0 for value in values):
            raise InvalidWeights(f"reward weights must be non-negative: {self.model_dump()}")
        if not any(value > 0 for value in values):
            raise InvalidWeights("at least one reward weight must be positive")
        return self

    @property
    def upper_bound(self) -> float:
        return self.w_em + self.w_info_think + self.w_think_answer + self.w_format

    def scaled(self, factor: float) -> "RewardWeights":
        return RewardWeights(
            w_em=self.w_em * factor,
            w_info_think=self.w_info_think * factor,
            w_think_answer=self.w_think_answer * factor,
            w_format=self.w_format * factor,
        )


WEIGHT_PRESETS: Dict[str, RewardWeights] = {
    "veritas": RewardWeights(w_em=0.9, w_info_think=0.05, w_think_answer=0.02),
    "veritas-info-think": RewardWeights(w_em=0.9, w_info_think=0.05, w_think_answer=0.0),
    "veritas-think-answer": RewardWeights(w_em=0.9, w_info_think=0.0, w_think_answer=0.02),
    "em-only": RewardWeights(w_em=1.0, w_info_think=0.0, w_think_answer=0.0),
}


def weights_from_preset(name: str) -> RewardWeights:
    try:
        return WEIGHT_PRESETS[name]
    except KeyError:
        raise ConfigError(
            f"unknown weights preset {name!r}; choose from {', '.join(sorted(WEIGHT_PRESETS))}"
        ) from None


class RewardBreakdown(BaseModel):
    model_config = ConfigDict(frozen=True)

    trajectory_id: str
    r_em: int
    r_info_think: float
    r_think_answer: int
    total: float
    format_valid: bool

    def to_record(self) -> Dict[str, Any]:
        return {
            "id": self.trajectory_id,
            "r_em": self.r_em,
            "r_info_think": self.r_info_think,
            "r_think_answer": self.r_think_answer,
            "total": self.total,
            "format_valid": self.format_valid,
        }

    @classmethod
    def from_record(cls, record: Dict[str, Any]) -> "RewardBreakdown":
        return cls(
            trajectory_id=record["id"],
            r_em=record["r_em"],
            r_info_think=record["r_info_think"],
            r_think_answer=record["r_think_answer"],
            total=record["total"],
            format_valid=record["format_valid"],
        )
