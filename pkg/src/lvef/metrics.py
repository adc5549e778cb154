"""Evaluation metrics: Dice, MAE/RMSE, EF classification, confusion scores.

EF values are fractions in [0, 1] everywhere in this package; callers
multiply MAE/RMSE by 100 only when reporting percentage points.
"""

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import (DimensionMismatch, EmptyInput, LengthMismatch,
                     OutOfRange)

__all__ = ["EF_CLASSES", "dice", "mae", "rmse", "classify_ef",
           "ConfusionMatrix", "ClassificationScores", "confusion_and_scores"]

# class order used for confusion matrices (rows true, columns predicted)
EF_CLASSES = ("pEF", "rEF", "mrEF")

# Boundary convention: the published ranges leave [0.49, 0.50) unassigned
# ("0.40-0.49" vs "> 0.50"); here mrEF = [0.40, 0.50) and pEF = [0.50, 1]
# so the partition is exhaustive.
_REF_UPPER = 0.40
_MREF_UPPER = 0.50


def dice(x, y, empty="one"):
    """Dice similarity coefficient 2|X∩Y| / (|X| + |Y|) of two masks.

    ``empty`` controls the 0/0 case when both masks are empty:
    ``"one"`` (default) defines it as perfect agreement, ``"error"``
    raises ``EmptyInput``.
    """
    xa = np.asarray(x, dtype=bool)
    ya = np.asarray(y, dtype=bool)
    if xa.shape != ya.shape:
        raise DimensionMismatch(f"mask shapes differ: {xa.shape} vs {ya.shape}")
    total = int(xa.sum()) + int(ya.sum())
    if total == 0:
        if empty == "one":
            return 1.0
        raise EmptyInput("both masks are empty")
    return 2.0 * int((xa & ya).sum()) / total


def _paired(predicted, truth):
    p = np.asarray(predicted, dtype=np.float64)
    t = np.asarray(truth, dtype=np.float64)
    if p.shape != t.shape or p.ndim != 1:
        raise LengthMismatch(f"lengths differ: {p.shape} vs {t.shape}")
    if p.size == 0:
        raise EmptyInput("empty input")
    return p, t


def mae(predicted, truth):
    """Mean absolute error between paired sequences."""
    p, t = _paired(predicted, truth)
    return float(np.mean(np.abs(p - t)))


def rmse(predicted, truth):
    """Root-mean-square error between paired sequences."""
    p, t = _paired(predicted, truth)
    return float(np.sqrt(np.mean((p - t) ** 2)))


def classify_ef(ef):
    """EF-range class: rEF (< 0.40), mrEF ([0.40, 0.50)), pEF (>= 0.50)."""
    if not 0.0 <= ef <= 1.0:
        raise OutOfRange(f"EF {ef} outside [0, 1]")
    if ef < _REF_UPPER:
        return "rEF"
    if ef < _MREF_UPPER:
        return "mrEF"
    return "pEF"


@dataclass(frozen=True)
class ConfusionMatrix:
    """3x3 counts, rows = true class, columns = predicted, order EF_CLASSES."""
    counts: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.counts, dtype=np.int64)
        if c.shape != (3, 3) or (c < 0).any():
            raise ValueError("confusion matrix must be 3x3 non-negative counts")
        object.__setattr__(self, "counts", c)

    @property
    def total(self):
        return int(self.counts.sum())

    @property
    def support(self):
        return self.counts.sum(axis=1)


@dataclass(frozen=True)
class ClassificationScores:
    micro_f1: float
    macro_f1: float
    macro_recall: float
    macro_precision: float
    per_class_f1: dict
    per_class_recall: dict
    per_class_precision: dict


def scores_from_confusion(matrix):
    """Micro/macro F1, recall, and precision from a confusion matrix.

    Micro-F1 equals accuracy (trace/total) for single-label multiclass.
    Macro scores are unweighted means over classes; a class with zero
    support contributes 0 and triggers a warning.
    """
    c = matrix.counts.astype(np.float64)
    tp = np.diag(c)
    support = c.sum(axis=1)
    predicted = c.sum(axis=0)
    if (support == 0).any():
        missing = [EF_CLASSES[i] for i in np.flatnonzero(support == 0)]
        warnings.warn(f"classes with zero support: {missing}", stacklevel=2)
    with np.errstate(divide="ignore", invalid="ignore"):
        recall = np.where(support > 0, tp / support, 0.0)
        precision = np.where(predicted > 0, tp / predicted, 0.0)
        denom = precision + recall
        f1 = np.where(denom > 0, 2 * precision * recall / denom, 0.0)
    return ClassificationScores(
        micro_f1=float(tp.sum() / c.sum()) if c.sum() else 0.0,
        macro_f1=float(f1.mean()),
        macro_recall=float(recall.mean()),
        macro_precision=float(precision.mean()),
        per_class_f1=dict(zip(EF_CLASSES, f1.tolist())),
        per_class_recall=dict(zip(EF_CLASSES, recall.tolist())),
        per_class_precision=dict(zip(EF_CLASSES, precision.tolist())),
    )


def confusion_and_scores(true_classes, predicted_classes):
    """Confusion matrix plus micro/macro classification scores."""
    t = list(true_classes)
    p = list(predicted_classes)
    if len(t) != len(p):
        raise LengthMismatch(f"lengths differ: {len(t)} vs {len(p)}")
    if not t:
        raise EmptyInput("empty class lists")
    index = {name: i for i, name in enumerate(EF_CLASSES)}
    counts = np.zeros((3, 3), dtype=np.int64)
    for ti, pi in zip(t, p):
        counts[index[ti], index[pi]] += 1
    matrix = ConfusionMatrix(counts)
    return matrix, scores_from_confusion(matrix)
