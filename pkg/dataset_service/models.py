from typing import Any, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

from metrics_service.models import FaithDimension
from trajectory_service.models import Trajectory


class TrajectoryRecord(BaseModel):
    """One JSONL corpus line; unknown fields are kept and echoed on output"""
    model_config = ConfigDict(extra="allow")

    id: str
    question: str
    golden_answers: List[str]
    trajectory: str
    dataset: str = "unknown"

    def extra_fields(self) -> Dict[str, Any]:
        return dict(self.model_extra or {})


class SidecarEntry(BaseModel):
    line: int
    error: str
    id: Optional[str] = None


class IngestResult(BaseModel):
    trajectories: List[Trajectory] = Field(default_factory=list)
    errors: List[SidecarEntry] = Field(default_factory=list)


class LabeledExample(BaseModel):
    """A rendered pair and its teacher label, ready for reward-model training"""
    model_config = ConfigDict(frozen=True)

    id: str
    dimension: FaithDimension
    input_string: str
    label: int = Field(ge=0, le=1)
    source_dataset: str
    teacher: str


class SplitSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    train_fraction: float = Field(default=0.9, gt=0, lt=1)
    seed: int = 0


class LabelRecord(BaseModel):
    """Any keyed label line: PairScore exports and judge verdicts alike"""
    model_config = ConfigDict(extra="ignore", frozen=True)

    trajectory_id: str
    dimension: FaithDimension
    pair_index: int = Field(ge=0)
    label: Union[Literal[0, 1], Literal["unparseable"]]

    @property
    def key(self) -> Tuple[str, str, int]:
        return (self.trajectory_id, self.dimension.value, self.pair_index)
