from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

FAITH_COLUMNS = ["info_think", "think_answer", "think_search"]


class TrajectoryScores(BaseModel):
    """Per-trajectory faithfulness aggregates; None marks an undefined score.

    ``metadata`` holds the unknown fields of the corpus record. They are
    echoed as top-level keys of the output record; score keys win a clash.
    """
    model_config = ConfigDict(frozen=True)

    trajectory_id: str
    dataset: str
    think_search: Optional[float] = None
    info_think: Optional[float] = None
    think_answer: Optional[float] = None
    format_valid: bool = False
    metadata: Dict[str, Any] = Field(default_factory=dict)

    def to_record(self) -> Dict[str, Any]:
        record = dict(self.metadata)
        record.update(self.model_dump(mode="json", exclude={"metadata"}))
        return record

    @classmethod
    def from_record(cls, record: Dict[str, Any]) -> "TrajectoryScores":
        known = set(cls.model_fields) - {"metadata"}
        fields = {key: value for key, value in record.items() if key in known}
        extra = {key: value for key, value in record.items() if key not in known}
        return cls(**fields, metadata=extra)


class DatasetSummary(BaseModel):
    dataset: str
    n: int
    em_mean: float
    info_think_mean: Optional[float] = None
    think_answer_mean: Optional[float] = None
    think_search_mean: Optional[float] = None
    format_valid_rate: float
    undefined_counts: Dict[str, int] = Field(default_factory=dict)
    # Same means with undefined scores counted as 0.
    zero_filled: Dict[str, float] = Field(default_factory=dict)


class CategorySummary(BaseModel):
    category: str
    datasets: List[str]
    em: Optional[float] = None
    info_think: Optional[float] = None
    think_answer: Optional[float] = None
    think_search: Optional[float] = None
    format_valid: Optional[float] = None
