from typing import Optional, Sequence

import numpy as np

from errors import MixedDimensions
from .models import AggregationPolicy, PairScore


def aggregate_labels(labels: Sequence[int], policy: AggregationPolicy = AggregationPolicy.MEAN) -> Optional[float]:
    """Reduce binary labels to one fraction; None when there is nothing to reduce"""
    if len(labels) == 0:
        return None
    values = np.asarray(labels, dtype=float)
    if policy == AggregationPolicy.MEAN:
        return float(values.mean())
    if policy == AggregationPolicy.MIN:
        return float(values.min())
    return 1.0 if bool(np.all(values == 1)) else 0.0


def aggregate(scores: Sequence[PairScore], policy: AggregationPolicy = AggregationPolicy.MEAN) -> Optional[float]:
    """Aggregate pair scores of a single dimension.

    Empty input is undefined (None), which is distinct from 0.

    Raises:
        MixedDimensions: scores span more than one dimension.
    """
    dimensions = {score.dimension for score in scores}
    if len(dimensions) > 1:
        names = sorted(d.value for d in dimensions)
        raise MixedDimensions(f"cannot aggregate across dimensions: {', '.join(names)}")
    return aggregate_labels([score.label for score in scores], policy)
