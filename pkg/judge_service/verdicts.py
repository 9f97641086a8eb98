import re

from .models import UNPARSEABLE, VerdictLabel

# A standalone 0 or 1: not part of a longer word, a signed number or a decimal.
_LABEL_TOKEN = re.compile(r"(?<![\w.\-])([01])(?![\w]|\.\d)")


def parse_verdict(raw: str) -> VerdictLabel:
    """Salvage a binary label from judge output.

    An exact "0"/"1" after trimming wins; otherwise the first standalone
    0/1 token is used; otherwise the output is unparseable.
    """
    text = raw.strip()
    if text in ("0", "1"):
        return int(text)
    match = _LABEL_TOKEN.search(text)
    if match:
        return int(match.group(1))
    return UNPARSEABLE
