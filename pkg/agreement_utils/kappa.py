import io
from typing import List, Sequence, Tuple, Union

import pandas as pd
import structlog
from sklearn.metrics import confusion_matrix

from errors import DimensionMismatch, LengthMismatch
from judge_service.models import UNPARSEABLE
from .models import AgreementReport, Confusion, LabelSequence

logger = structlog.get_logger(__name__)

RawLabel = Union[int, str]


def drop_unparseable(
    labels_a: Sequence[RawLabel], labels_b: Sequence[RawLabel]
) -> Tuple[List[int], List[int], int]:
    """Remove every index where either rater's verdict is unparseable"""
    if len(labels_a) != len(labels_b):
        raise LengthMismatch(f"label sequences differ in length: {len(labels_a)} vs {len(labels_b)}")
    kept_a: List[int] = []
    kept_b: List[int] = []
    for label_a, label_b in zip(labels_a, labels_b):
        if label_a == UNPARSEABLE or label_b == UNPARSEABLE:
            continue
        kept_a.append(int(label_a))
        kept_b.append(int(label_b))
    return kept_a, kept_b, len(labels_a) - len(kept_a)


def confusion_counts(labels_a: Sequence[int], labels_b: Sequence[int]) -> Confusion:
    # Rows are rater A, columns rater B, positive class first.
    matrix = confusion_matrix(list(labels_a), list(labels_b), labels=[1, 0])
    return Confusion(
        a=int(matrix[0][0]),
        b=int(matrix[0][1]),
        c=int(matrix[1][0]),
        d=int(matrix[1][1]),
    )


def kappa_from_counts(confusion: Confusion) -> Tuple[float, float, bool]:
    """Consistent ratio, Cohen's kappa and the degenerate-marginal flag.

    Computed in integers: with E = (a+b)(a+c) + (c+d)(b+d),
    kappa = (n(a+d) - E) / (n^2 - E). When p_e = 1 (E = n^2) kappa is 1 on
    perfect agreement and 0 otherwise.
    """
    a, b, c, d = confusion.a, confusion.b, confusion.c, confusion.d
    n = confusion.n
    observed = a + d
    expected = (a + b) * (a + c) + (c + d) * (b + d)
    consistent_ratio = observed / n

    if expected == n * n:
        return consistent_ratio, (1.0 if observed == n else 0.0), True
    return consistent_ratio, (n * observed - expected) / (n * n - expected), False


def agreement(a: LabelSequence, b: LabelSequence, dropped: int = 0) -> AgreementReport:
    """Consistent ratio and Cohen's kappa between two raters.

    Raises:
        LengthMismatch: the sequences differ in length.
        DimensionMismatch: the sequences label different dimensions.
    """
    if len(a) != len(b):
        raise LengthMismatch(f"label sequences differ in length: {len(a)} vs {len(b)}")
    if a.dimension != b.dimension:
        raise DimensionMismatch(f"cannot compare {a.dimension.value} with {b.dimension.value} labels")

    confusion = confusion_counts(a.labels, b.labels)
    consistent_ratio, kappa, degenerate = kappa_from_counts(confusion)
    if degenerate:
        logger.warning("degenerate_marginals", rater_a=a.rater, rater_b=b.rater, n=confusion.n)

    return AgreementReport(
        n=confusion.n,
        consistent_ratio=consistent_ratio,
        kappa=kappa,
        confusion=confusion,
        rater_a=a.rater,
        rater_b=b.rater,
        dimension=a.dimension,
        dropped=dropped,
        degenerate=degenerate,
    )


def pairwise_matrix(sequences: Sequence[LabelSequence]) -> List[List[AgreementReport]]:
    """Agreement for every ordered pair of raters; symmetric with unit diagonal"""
    if sequences:
        first = sequences[0]
        for other in sequences[1:]:
            if len(other) != len(first):
                raise LengthMismatch(f"rater {other.rater!r} has {len(other)} labels, expected {len(first)}")
            if other.dimension != first.dimension:
                raise DimensionMismatch(f"rater {other.rater!r} labels {other.dimension.value}")

    size = len(sequences)
    matrix: List[List[AgreementReport]] = [[None] * size for _ in range(size)]  # type: ignore[list-item]
    for i in range(size):
        for j in range(i, size):
            report = agreement(sequences[i], sequences[j])
            matrix[i][j] = report
            if i != j:
                matrix[j][i] = report.model_copy(
                    update={
                        "confusion": report.confusion.transposed(),
                        "rater_a": report.rater_b,
                        "rater_b": report.rater_a,
                    }
                )
    return matrix


def matrix_to_csv(matrix: List[List[AgreementReport]]) -> str:
    """One row per rater pair: rater_a, rater_b, n, consistent_ratio, kappa"""
    rows = [
        {
            "rater_a": report.rater_a,
            "rater_b": report.rater_b,
            "n": report.n,
            "consistent_ratio": report.consistent_ratio,
            "kappa": report.kappa,
        }
        for row in matrix
        for report in row
    ]
    frame = pd.DataFrame(rows, columns=["rater_a", "rater_b", "n", "consistent_ratio", "kappa"])
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, lineterminator="\n")
    return buffer.getvalue()
