from typing import Any, Dict, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from errors import ConfigError
from metrics_service.models import FaithDimension, PairKey

UNPARSEABLE = "unparseable"

VerdictLabel = Literal[0, 1, "unparseable"]

ClientType = Literal["http", "anthropic", "openai", "mock"]


class PairRef(BaseModel):
    model_config = ConfigDict(frozen=True)

    trajectory_id: str
    dimension: FaithDimension
    pair_index: int = Field(ge=0)

    @property
    def key(self) -> PairKey:
        return (self.trajectory_id, self.dimension.value, self.pair_index)


class JudgePrompt(BaseModel):
    """A fully rendered judge prompt plus the pair text substituted into it"""
    model_config = ConfigDict(frozen=True)

    dimension: FaithDimension
    text: str
    pair_ref: PairRef
    input_string: str


class JudgeVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    pair_ref: PairRef
    label: VerdictLabel
    raw: str
    backend: str

    @property
    def parseable(self) -> bool:
        return self.label != UNPARSEABLE

    def to_record(self) -> Dict[str, Any]:
        return {
            "trajectory_id": self.pair_ref.trajectory_id,
            "dimension": self.pair_ref.dimension.value,
            "pair_index": self.pair_ref.pair_index,
            "label": self.label,
            "provenance": "judge",
            "raw": self.raw,
            "backend": self.backend,
        }

    @classmethod
    def from_record(cls, record: Dict[str, Any]) -> "JudgeVerdict":
        return cls(
            pair_ref=PairRef(
                trajectory_id=record["trajectory_id"],
                dimension=record["dimension"],
                pair_index=record["pair_index"],
            ),
            label=record["label"],
            raw=record.get("raw", str(record["label"])),
            backend=record.get("backend", "unknown"),
        )


class JudgeBackendConfig(BaseModel):
    """Connection and dispatch settings for a judge backend"""
    model_config = ConfigDict(frozen=True)

    client_type: ClientType = "mock"
    endpoint: Optional[str] = None
    model: str = "claude-3-7-sonnet-20250219"
    temperature: float = Field(default=0.0, ge=0)
    max_attempts: int = Field(default=3, ge=1)
    timeout: float = Field(default=60.0, gt=0)
    parallelism: int = Field(default=8, ge=1)
    retry_backoff: float = Field(default=0.5, ge=0)

    @classmethod
    def build(cls, **settings: Any) -> "JudgeBackendConfig":
        """Validate settings, reporting problems as ConfigError"""
        try:
            config = cls(**{k: v for k, v in settings.items() if v is not None})
        except ValidationError as e:
            raise ConfigError(f"invalid judge configuration: {e}") from e
        if config.client_type == "http" and not config.endpoint:
            raise ConfigError("the http judge backend requires an endpoint")
        return config
