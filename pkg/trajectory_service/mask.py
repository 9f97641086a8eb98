from typing import List, Tuple

from .models import BlockKind, MaskSegment, Span, Trajectory


def retrieval_mask(trajectory: Trajectory, include_tags: bool = False) -> List[MaskSegment]:
    """Partition the source into model-generated and retrieved spans.

    Information block interiors are ``retrieved=True``; with ``include_tags``
    the surrounding ``<information>`` tags are masked as well. Adjacent
    segments with the same flag are merged, so flags always alternate.
    Character level only; token alignment is left to the consumer.
    """
    retrieved_spans: List[Tuple[int, int]] = []
    for block in trajectory.blocks_of(BlockKind.INFORMATION):
        span = block.span if include_tags else block.content_span
        if span.end > span.start:
            retrieved_spans.append((span.start, span.end))

    segments: List[MaskSegment] = []

    def push(start: int, end: int, retrieved: bool) -> None:
        if end <= start:
            return
        if segments and segments[-1].retrieved == retrieved:
            previous = segments.pop()
            start = previous.span.start
        segments.append(MaskSegment(span=Span(start=start, end=end), retrieved=retrieved))

    cursor = 0
    for start, end in retrieved_spans:
        push(cursor, start, False)
        push(start, end, True)
        cursor = end
    push(cursor, len(trajectory.source), False)

    return segments


def retrieved_length(segments: List[MaskSegment]) -> int:
    return sum(len(segment.span) for segment in segments if segment.retrieved)
