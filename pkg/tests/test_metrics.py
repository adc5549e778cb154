import math

import numpy as np
import pytest

from lvef.errors import (
    DimensionMismatch,
    EmptyInput,
    LengthMismatch,
    OutOfRange,
)
from lvef.metrics import (
    EF_CLASSES,
    ConfusionMatrix,
    classify_ef,
    confusion_and_scores,
    dice,
    mae,
    rmse,
    scores_from_confusion,
)

# published reference confusion matrix for an EF classifier on a 1276-video
# echocardiogram test set; rows = true class, columns = predicted,
# order (pEF, rEF, mrEF)
REFERENCE_CONFUSION = np.array([[932, 6, 53],
                                [28, 86, 46],
                                [76, 11, 38]])


def test_dice_identical():
    m = np.zeros((5, 5), dtype=np.uint8)
    m[1:3, 1:3] = 1
    assert dice(m, m) == 1.0


def test_dice_disjoint():
    a = np.zeros((4, 4), dtype=np.uint8)
    b = np.zeros((4, 4), dtype=np.uint8)
    a[0, 0] = 1
    b[3, 3] = 1
    assert dice(a, b) == 0.0


def test_dice_half_overlap():
    a = np.zeros((4, 4), dtype=np.uint8)
    b = np.zeros((4, 4), dtype=np.uint8)
    a[0, 0:2] = 1
    b[0, 1:3] = 1
    assert dice(a, b) == 0.5


def test_dice_both_empty():
    e = np.zeros((3, 3), dtype=np.uint8)
    assert dice(e, e) == 1.0
    with pytest.raises(EmptyInput):
        dice(e, e, empty="error")


def test_dice_shape_mismatch():
    with pytest.raises(DimensionMismatch):
        dice(np.zeros((3, 3)), np.zeros((4, 4)))


def test_dice_symmetric():
    rng = np.random.default_rng(31)
    for _ in range(20):
        a = (rng.random((10, 10)) < 0.4).astype(np.uint8)
        b = (rng.random((10, 10)) < 0.4).astype(np.uint8)
        d = dice(a, b)
        assert d == dice(b, a)
        assert 0.0 <= d <= 1.0
        assert (d == 1.0) == bool(np.array_equal(a, b))


def test_mae_examples():
    assert mae([1, 2, 3], [1, 2, 3]) == 0.0
    assert mae([50, 60], [55, 58]) == pytest.approx(3.5)


def test_rmse_examples():
    assert rmse([1, 2], [1, 2]) == 0.0
    assert rmse([1, -1], [0, 0]) == pytest.approx(1.0)
    assert rmse([3, 4], [0, 0]) == pytest.approx(math.sqrt(12.5))


def test_mae_rmse_errors():
    with pytest.raises(LengthMismatch):
        mae([1, 2], [1])
    with pytest.raises(EmptyInput):
        rmse([], [])


def test_mae_le_rmse():
    rng = np.random.default_rng(37)
    for _ in range(50):
        n = int(rng.integers(1, 30))
        p = rng.normal(0, 1, n)
        t = rng.normal(0, 1, n)
        assert mae(p, t) <= rmse(p, t) + 1e-12
    # equality iff all absolute errors are equal
    assert mae([1, -1, 1], [0, 0, 0]) == pytest.approx(rmse([1, -1, 1],
                                                            [0, 0, 0]))


def test_classify_ef_examples():
    assert classify_ef(0.35) == "rEF"
    assert classify_ef(0.45) == "mrEF"
    assert classify_ef(0.55) == "pEF"
    # boundary convention: mrEF = [0.40, 0.50), pEF = [0.50, 1]
    assert classify_ef(0.40) == "mrEF"
    assert classify_ef(0.499) == "mrEF"
    assert classify_ef(0.50) == "pEF"


def test_classify_ef_out_of_range():
    for bad in (-0.01, 1.01):
        with pytest.raises(OutOfRange):
            classify_ef(bad)


def test_classify_ef_monotone():
    order = {"rEF": 0, "mrEF": 1, "pEF": 2}
    grid = np.arange(0.0, 1.0001, 0.001)
    classes = [order[classify_ef(float(e))] for e in grid]
    assert classes == sorted(classes)


def test_reference_confusion_micro_f1():
    scores = scores_from_confusion(ConfusionMatrix(REFERENCE_CONFUSION))
    assert scores.micro_f1 == pytest.approx(1056 / 1276)
    assert scores.micro_f1 == pytest.approx(0.828, abs=0.001)


def test_reference_confusion_all_scores():
    scores = scores_from_confusion(ConfusionMatrix(REFERENCE_CONFUSION))
    assert scores.macro_f1 == pytest.approx(0.621, abs=0.001)
    assert scores.macro_recall == pytest.approx(0.593, abs=0.001)
    assert scores.macro_precision == pytest.approx(0.671, abs=0.001)
    assert scores.per_class_f1["pEF"] == pytest.approx(0.92, abs=0.005)
    assert scores.per_class_f1["rEF"] == pytest.approx(0.65, abs=0.005)
    assert scores.per_class_f1["mrEF"] == pytest.approx(0.29, abs=0.005)


def test_confusion_and_scores_perfect():
    classes = ["pEF"] * 4 + ["rEF"] * 3 + ["mrEF"] * 2
    matrix, scores = confusion_and_scores(classes, classes)
    assert np.array_equal(np.diag(matrix.counts), [4, 3, 2])
    assert scores.micro_f1 == 1.0
    assert scores.macro_f1 == 1.0


def test_confusion_and_scores_round_trip():
    # expand a matrix into label lists and recover it exactly
    rng = np.random.default_rng(41)
    counts = rng.integers(1, 20, (3, 3))
    t, p = [], []
    for i, ti in enumerate(EF_CLASSES):
        for j, pj in enumerate(EF_CLASSES):
            t += [ti] * int(counts[i, j])
            p += [pj] * int(counts[i, j])
    matrix, scores = confusion_and_scores(t, p)
    assert np.array_equal(matrix.counts, counts)
    assert scores.micro_f1 == pytest.approx(
        np.trace(counts) / counts.sum())


def test_zero_support_class_warns():
    with pytest.warns(UserWarning):
        confusion_and_scores(["pEF", "rEF"], ["pEF", "rEF"])


def test_length_mismatch():
    with pytest.raises(LengthMismatch):
        confusion_and_scores(["pEF"], ["pEF", "rEF"])
