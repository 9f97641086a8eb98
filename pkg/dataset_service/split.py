import hashlib
from typing import List, Sequence, Tuple

from .models import LabeledExample, SplitSpec


def split_key(example_id: str, seed: int) -> Tuple[int, str]:
    digest = hashlib.sha256(f"{seed}:{example_id}".encode("utf-8")).hexdigest()
    return int(digest, 16), example_id


def split(
    examples: Sequence[LabeledExample], spec: SplitSpec
) -> Tuple[List[LabeledExample], List[LabeledExample]]:
    """Deterministic train/eval partition keyed on hashed ids.

    The train side is the round(n * train_fraction) examples with the lowest
    sha256(seed:id) keys, so membership does not depend on input order.
    Both sides keep the input's relative order.
    """
    n_train = int(round(len(examples) * spec.train_fraction))
    ranked = sorted(range(len(examples)), key=lambda i: split_key(examples[i].id, spec.seed))
    train_indices = set(ranked[:n_train])

    train = [example for i, example in enumerate(examples) if i in train_indices]
    evaluation = [example for i, example in enumerate(examples) if i not in train_indices]
    return train, evaluation
