from typing import Any, Dict, List

from pydantic import BaseModel, ConfigDict, Field, field_validator

from metrics_service.models import FaithDimension


class LabelSequence(BaseModel):
    """Binary labels from one rater, in item order"""
    model_config = ConfigDict(frozen=True)

    labels: List[int]
    rater: str
    dimension: FaithDimension

    @field_validator("labels")
    @classmethod
    def _binary_non_empty(cls, labels: List[int]) -> List[int]:
        if not labels:
            raise ValueError("a label sequence must not be empty")
        if any(label not in (0, 1) for label in labels):
            raise ValueError("labels must be 0 or 1")
        return labels

    def __len__(self) -> int:
        return len(self.labels)


class Confusion(BaseModel):
    """2x2 counts: a = both 1, b = A1/B0, c = A0/B1, d = both 0"""
    model_config = ConfigDict(frozen=True)

    a: int = Field(ge=0)
    b: int = Field(ge=0)
    c: int = Field(ge=0)
    d: int = Field(ge=0)

    @property
    def n(self) -> int:
        return self.a + self.b + self.c + self.d

    def transposed(self) -> "Confusion":
        return Confusion(a=self.a, b=self.c, c=self.b, d=self.d)


class AgreementReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    consistent_ratio: float
    kappa: float
    confusion: Confusion
    rater_a: str = ""
    rater_b: str = ""
    dimension: FaithDimension
    dropped: int = 0
    degenerate: bool = False  # both raters constant and p_e = 1; kappa set by convention

    def to_record(self) -> Dict[str, Any]:
        return self.model_dump(mode="json")
