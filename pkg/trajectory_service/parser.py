import re
from typing import Any, Dict, Iterable, List, Optional, Tuple

from errors import NestedTag, UnclosedTag
from .models import Block, BlockKind, Span, Trajectory

# Exact, case-sensitive tags only; anything else is plain text.
TAG_PATTERN = re.compile(r"<(/?)(think|search|information|answer)>")


def parse(
    source: str,
    id: str = "",
    question: str = "",
    golden_answers: Iterable[str] = (),
    dataset: str = "unknown",
    metadata: Optional[Dict[str, Any]] = None,
) -> Trajectory:
    """Parse rollout text into a Trajectory.

    Every well-formed ``<tag>...</tag>`` region of the four known kinds
    becomes a Block. A closing tag with no open block is plain text.

    Raises:
        NestedTag: a known opening tag, or a closing tag of another kind,
            appears inside an open block.
        UnclosedTag: an opening tag is never closed.
    """
    blocks: List[Block] = []
    open_kind: Optional[BlockKind] = None
    open_start = 0
    content_start = 0

    for match in TAG_PATTERN.finditer(source):
        closing = match.group(1) == "/"
        kind = BlockKind(match.group(2))

        if open_kind is None:
            if closing:
                continue
            open_kind = kind
            open_start = match.start()
            content_start = match.end()
            continue

        if not closing or kind != open_kind:
            raise NestedTag(match.start())

        blocks.append(
            Block(
                kind=open_kind,
                content=source[content_start:match.start()],
                span=Span(start=open_start, end=match.end()),
            )
        )
        open_kind = None

    if open_kind is not None:
        raise UnclosedTag(open_kind, open_start)

    return Trajectory(
        id=id,
        source=source,
        blocks=tuple(blocks),
        question=question,
        golden_answers=tuple(golden_answers),
        dataset=dataset,
        metadata=dict(metadata or {}),
    )


def serialize(trajectory: Trajectory) -> str:
    """Rebuild the source from blocks plus inter-block text"""
    parts: List[str] = []
    for span, block in trajectory.segments():
        if block is None:
            parts.append(trajectory.source[span.start:span.end])
        else:
            parts.append(block.render())
    return "".join(parts)


def block_pair_text(first: Block, second: Block) -> str:
    """Two blocks with their original tags, joined by a single newline"""
    return f"{first.render()}\n{second.render()}"


def split_pair_text(text: str) -> Tuple[Block, ...]:
    """Recover the blocks of a serialized pair (inverse of block_pair_text)"""
    return parse(text).blocks
