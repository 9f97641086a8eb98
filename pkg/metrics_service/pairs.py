from typing import List, Optional, Tuple

from trajectory_service.models import Block, BlockKind, Trajectory
from .models import FaithDimension, FaithfulnessPair


def _nearest_before(blocks: Tuple[Block, ...], index: int, kind: BlockKind) -> Optional[Block]:
    for position in range(index - 1, -1, -1):
        if blocks[position].kind == kind:
            return blocks[position]
    return None


def _nearest_after(blocks: Tuple[Block, ...], index: int, kind: BlockKind) -> Optional[Block]:
    for position in range(index + 1, len(blocks)):
        if blocks[position].kind == kind:
            return blocks[position]
    return None


def extract_pairs(trajectory: Trajectory, dimension: FaithDimension) -> List[FaithfulnessPair]:
    """Extract faithfulness pairs in document order, best effort.

    ThinkSearch: each Search with its nearest preceding Think.
    InfoThink:   each Information with its nearest following Think.
    ThinkAnswer: the final Answer with the latest Think before it.
    Blocks without a partner yield no pair.
    """
    blocks = trajectory.blocks
    matched: List[Tuple[Block, Block]] = []

    if dimension == FaithDimension.THINK_SEARCH:
        for index, block in enumerate(blocks):
            if block.kind == BlockKind.SEARCH:
                think = _nearest_before(blocks, index, BlockKind.THINK)
                if think is not None:
                    matched.append((think, block))

    elif dimension == FaithDimension.INFO_THINK:
        for index, block in enumerate(blocks):
            if block.kind == BlockKind.INFORMATION:
                think = _nearest_after(blocks, index, BlockKind.THINK)
                if think is not None:
                    matched.append((block, think))

    elif dimension == FaithDimension.THINK_ANSWER:
        answer_indices = [i for i, block in enumerate(blocks) if block.kind == BlockKind.ANSWER]
        if answer_indices:
            last = answer_indices[-1]
            think = _nearest_before(blocks, last, BlockKind.THINK)
            if think is not None:
                matched.append((think, blocks[last]))

    return [
        FaithfulnessPair(
            dimension=dimension,
            premise=premise,
            conclusion=conclusion,
            trajectory_id=trajectory.id,
            pair_index=index,
        )
        for index, (premise, conclusion) in enumerate(matched)
    ]
