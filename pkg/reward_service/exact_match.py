import re
import string
from typing import Callable, Dict, Sequence

from errors import ConfigError, EmptyGoldSet

_ARTICLES = re.compile(r"\b(a|an|the)\b")
_PUNCTUATION = set(string.punctuation)


def normalize_answer(text: str) -> str:
    """Open-domain QA answer normalization.

    lowercase -> drop articles -> drop punctuation -> collapse whitespace -> trim
    """
    text = text.lower()
    text = _ARTICLES.sub(" ", text)
    text = "".join(ch for ch in text if ch not in _PUNCTUATION)
    return " ".join(text.split())


def identity(text: str) -> str:
    return text


NORMALIZERS: Dict[str, Callable[[str], str]] = {
    "standard": normalize_answer,
    "identity": identity,
}


def get_normalizer(name: str) -> Callable[[str], str]:
    if name not in NORMALIZERS:
        raise ConfigError(f"unknown EM normalizer {name!r}")
    return NORMALIZERS[name]


def exact_match(predicted: str, golden_answers: Sequence[str], normalizer: str = "standard") -> int:
    """1 iff the normalized prediction equals some normalized golden answer.

    Raises:
        EmptyGoldSet: no golden answers were given.
    """
    if not golden_answers:
        raise EmptyGoldSet("exact match needs at least one golden answer")
    normalize = get_normalizer(normalizer)
    prediction = normalize(predicted)
    return int(any(prediction == normalize(golden) for golden in golden_answers))
