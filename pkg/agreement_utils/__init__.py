from .kappa import (
    agreement,
    confusion_counts,
    drop_unparseable,
    kappa_from_counts,
    matrix_to_csv,
    pairwise_matrix,
)
from .models import AgreementReport, Confusion, LabelSequence

__all__ = [
    "AgreementReport",
    "Confusion",
    "LabelSequence",
    "agreement",
    "confusion_counts",
    "drop_unparseable",
    "kappa_from_counts",
    "matrix_to_csv",
    "pairwise_matrix",
]
