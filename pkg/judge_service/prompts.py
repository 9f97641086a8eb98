from functools import lru_cache
from pathlib import Path

from errors import UnsupportedDimension
from metrics_service.models import FaithDimension, FaithfulnessPair
from trajectory_service.parser import block_pair_text
from .models import JudgePrompt, PairRef

TEMPLATE_DIR = Path(__file__).parent / "templates"

TEMPLATE_FILES = {
    FaithDimension.THINK_SEARCH: "think_search.txt",
    FaithDimension.INFO_THINK: "info_think.txt",
}

PLACEHOLDER = "{input_string}"


@lru_cache(maxsize=None)
def load_template(dimension: FaithDimension) -> str:
    if dimension not in TEMPLATE_FILES:
        raise UnsupportedDimension(f"{dimension.value} pairs are scored by regex, not judged")
    return (TEMPLATE_DIR / TEMPLATE_FILES[dimension]).read_text(encoding="utf-8")


def serialize_pair(pair: FaithfulnessPair) -> str:
    """The pair text substituted into a template: both blocks with their tags"""
    return block_pair_text(pair.premise, pair.conclusion)


def render_prompt(pair: FaithfulnessPair) -> JudgePrompt:
    """Render the judge prompt for a ThinkSearch or InfoThink pair.

    Raises:
        UnsupportedDimension: for ThinkAnswer pairs.
    """
    template = load_template(pair.dimension)
    input_string = serialize_pair(pair)
    return JudgePrompt(
        dimension=pair.dimension,
        text=template.replace(PLACEHOLDER, input_string),
        pair_ref=PairRef(
            trajectory_id=pair.trajectory_id,
            dimension=pair.dimension,
            pair_index=pair.pair_index,
        ),
        input_string=input_string,
    )
