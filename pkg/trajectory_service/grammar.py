from typing import Dict, List, Optional, Sequence, Tuple

from errors import NestedTag, UnclosedTag
from .models import BlockKind, FormatVerdict, Trajectory, Violation, ViolationCode
from .parser import parse

T, S, I, A = BlockKind.THINK, BlockKind.SEARCH, BlockKind.INFORMATION, BlockKind.ANSWER

# Automaton for: Think (Search Information Think)* Answer
_START, _AFTER_THINK, _AFTER_SEARCH, _AFTER_INFO, _DONE = range(5)

_TRANSITIONS: Dict[Tuple[int, BlockKind], int] = {
    (_START, T): _AFTER_THINK,
    (_AFTER_THINK, S): _AFTER_SEARCH,
    (_AFTER_THINK, A): _DONE,
    (_AFTER_SEARCH, I): _AFTER_INFO,
    (_AFTER_INFO, T): _AFTER_THINK,
}


def _violation_at(state: int, position: int, kind: BlockKind) -> Violation:
    if state == _START:
        return Violation(
            code=ViolationCode.LEADING_NON_THINK,
            position=position,
            message=f"trajectory starts with <{kind.tag}> instead of <think>",
        )
    if state == _AFTER_SEARCH:
        return Violation(
            code=ViolationCode.SEARCH_WITHOUT_INFORMATION,
            position=position,
            message=f"<search> followed by <{kind.tag}> instead of <information>",
        )
    if state == _DONE:
        return Violation(
            code=ViolationCode.INTERLEAVE_ERROR,
            position=position,
            message=f"<{kind.tag}> after the final <answer>",
        )
    return Violation(
        code=ViolationCode.INTERLEAVE_ERROR,
        position=position,
        message=f"unexpected <{kind.tag}> block",
    )


def check_kinds(kinds: Sequence[BlockKind]) -> FormatVerdict:
    """Decide the block grammar on a kind sequence.

    The first position where the sequence leaves the grammar is reported;
    missing-answer is added whenever no Answer block exists at all.
    """
    violations: List[Violation] = []
    state = _START
    failed: Optional[Violation] = None

    for position, kind in enumerate(kinds):
        next_state = _TRANSITIONS.get((state, kind))
        if next_state is None:
            failed = _violation_at(state, position, kind)
            break
        state = next_state

    if failed is None and state != _DONE:
        if state == _AFTER_SEARCH:
            failed = Violation(
                code=ViolationCode.SEARCH_WITHOUT_INFORMATION,
                position=len(kinds) - 1,
                message="<search> at end of trajectory without <information>",
            )
        else:
            failed = Violation(
                code=ViolationCode.MISSING_ANSWER,
                position=len(kinds),
                message="trajectory ends without an <answer>",
            )

    if failed is not None:
        violations.append(failed)
    if A not in kinds and all(v.code != ViolationCode.MISSING_ANSWER for v in violations):
        violations.append(
            Violation(code=ViolationCode.MISSING_ANSWER, message="no <answer> block")
        )

    return FormatVerdict(violations=tuple(violations))


def check_format(trajectory: Trajectory) -> FormatVerdict:
    """Check a parsed trajectory against the think-search-information-answer grammar.

    Free text between blocks is ignored.
    """
    return check_kinds(trajectory.kinds)


def check_source_format(source: str) -> FormatVerdict:
    """Parse and check raw text, reporting parse failures as violations"""
    try:
        trajectory = parse(source)
    except UnclosedTag as e:
        return FormatVerdict(
            violations=(Violation(code=ViolationCode.UNCLOSED_TAG, position=e.offset, message=str(e)),)
        )
    except NestedTag as e:
        return FormatVerdict(
            violations=(Violation(code=ViolationCode.INTERLEAVE_ERROR, position=e.offset, message=str(e)),)
        )
    return check_format(trajectory)
