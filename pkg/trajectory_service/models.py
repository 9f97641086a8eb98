from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class BlockKind(str, Enum):
    """The four tagged block types of an agentic-search rollout"""
    THINK = "think"
    SEARCH = "search"
    INFORMATION = "information"
    ANSWER = "answer"

    @property
    def tag(self) -> str:
        return self.value

    @property
    def open_tag(self) -> str:
        return f"<{self.value}>"

    @property
    def close_tag(self) -> str:
        return f"</{self.value}>"


class Span(BaseModel):
    """Half-open character offsets [start, end) into the source text"""
    model_config = ConfigDict(frozen=True)

    start: int = Field(ge=0)
    end: int = Field(ge=0)

    @model_validator(mode="after")
    def _ordered(self) -> "Span":
        if self.end < self.start:
            raise ValueError(f"span end {self.end} precedes start {self.start}")
        return self

    def __len__(self) -> int:
        return self.end - self.start


class Block(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: BlockKind
    content: str
    span: Span

    @property
    def content_span(self) -> Span:
        """Offsets of the content strictly between the opening and closing tags"""
        return Span(
            start=self.span.start + len(self.kind.open_tag),
            end=self.span.end - len(self.kind.close_tag),
        )

    def render(self) -> str:
        return f"{self.kind.open_tag}{self.content}{self.kind.close_tag}"


class Trajectory(BaseModel):
    """A parsed rollout: the raw text plus its blocks in document order.

    ``metadata`` keeps any unknown fields of the ingested record so they can
    be echoed on output.
    """
    model_config = ConfigDict(frozen=True)

    id: str
    source: str
    blocks: Tuple[Block, ...] = ()
    question: str = ""
    golden_answers: Tuple[str, ...] = ()
    dataset: str = "unknown"
    metadata: Dict[str, Any] = Field(default_factory=dict)

    @property
    def kinds(self) -> List[BlockKind]:
        return [block.kind for block in self.blocks]

    def blocks_of(self, kind: BlockKind) -> List[Block]:
        return [block for block in self.blocks if block.kind == kind]

    def final_answer(self) -> Optional[Block]:
        """The last Answer block: the agent's committed answer"""
        answers = self.blocks_of(BlockKind.ANSWER)
        return answers[-1] if answers else None

    def segments(self) -> List[Tuple[Span, Optional[Block]]]:
        """Partition the source into inter-block text (None) and blocks"""
        parts: List[Tuple[Span, Optional[Block]]] = []
        cursor = 0
        for block in self.blocks:
            if block.span.start > cursor:
                parts.append((Span(start=cursor, end=block.span.start), None))
            parts.append((block.span, block))
            cursor = block.span.end
        if cursor < len(self.source):
            parts.append((Span(start=cursor, end=len(self.source)), None))
        return parts


class ViolationCode(str, Enum):
    MISSING_ANSWER = "missing-answer"
    SEARCH_WITHOUT_INFORMATION = "search-without-information"
    LEADING_NON_THINK = "leading-non-think"
    INTERLEAVE_ERROR = "interleave-error"
    UNCLOSED_TAG = "unclosed-tag"


class Violation(BaseModel):
    model_config = ConfigDict(frozen=True)

    code: ViolationCode
    position: Optional[int] = None  # block index, or character offset for tag errors
    message: str = ""


class FormatVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    violations: Tuple[Violation, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.violations

    @property
    def codes(self) -> List[ViolationCode]:
        return [violation.code for violation in self.violations]

    def to_record(self) -> Dict[str, Any]:
        return {
            "valid": self.valid,
            "violations": [v.model_dump(mode="json") for v in self.violations],
        }


class MaskSegment(BaseModel):
    model_config = ConfigDict(frozen=True)

    span: Span
    retrieved: bool
