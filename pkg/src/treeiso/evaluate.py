"""Clustering evaluation against ground-truth labels."""

from __future__ import annotations

import numpy as np
from scipy.optimize import linear_sum_assignment


def misclassification_rate(predicted, truth) -> float:
    """Fraction of points labelled incorrectly under the best injective
    mapping from cluster ids to class ids.

    Cluster ids are arbitrary ints with -1 meaning residue; residue points
    can match no class and always count as errors. When there are more
    clusters than classes the unmatched clusters' points all count as
    errors (and vice versa for unmatched classes)."""
    predicted = list(predicted)
    truth = list(truth)
    if len(predicted) != len(truth):
        raise ValueError(f"length mismatch: {len(predicted)} predictions vs "
                         f"{len(truth)} truth labels")
    if not predicted:
        raise ValueError("nothing to evaluate")
    clusters = sorted({c for c in predicted if c != -1})
    classes = sorted({str(t) for t in truth})
    cluster_idx = {c: i for i, c in enumerate(clusters)}
    class_idx = {t: i for i, t in enumerate(classes)}
    counts = np.zeros((max(len(clusters), 1), len(classes)), dtype=np.int64)
    for c, t in zip(predicted, truth):
        if c != -1:
            counts[cluster_idx[c], class_idx[str(t)]] += 1
    rows, cols = linear_sum_assignment(-counts)
    matched = int(counts[rows, cols].sum())
    return (len(predicted) - matched) / len(predicted)
