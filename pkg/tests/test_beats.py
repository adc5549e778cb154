import numpy as np
import pytest

from lvef.beats import (
    VolumeSignal,
    default_min_separation,
    estimate_ef,
    find_extrema,
    median_filter,
    segment_cycles,
)
from lvef.errors import InvalidWindow, NoCycles


def sig(values, fps=None):
    return VolumeSignal(np.asarray(values, dtype=float), fps)


def test_median_filter_spike():
    out = median_filter(sig([0, 100, 0]), window=3)
    assert np.array_equal(out.volumes, [0, 0, 0])


def test_median_filter_window_one_is_identity():
    v = [3.0, 7.0, 1.0, 9.0]
    out = median_filter(sig(v), window=1)
    assert np.array_equal(out.volumes, v)


def test_median_filter_constant_unchanged():
    out = median_filter(sig([5, 5, 5, 5]), window=3)
    assert np.array_equal(out.volumes, [5, 5, 5, 5])


@pytest.mark.parametrize("window", [0, 2, 4, -1])
def test_median_filter_invalid_window(window):
    with pytest.raises(InvalidWindow):
        median_filter(sig([1, 2, 3]), window=window)


def test_median_filter_too_wide():
    with pytest.raises(InvalidWindow):
        median_filter(sig([1, 2, 3]), window=7)


def test_median_filter_stays_within_bounds_and_idempotent_on_monotone():
    rng = np.random.default_rng(17)
    for _ in range(20):
        v = rng.uniform(0, 100, 40)
        out = median_filter(sig(v), window=5).volumes
        assert out.min() >= v.min() - 1e-12
        assert out.max() <= v.max() + 1e-12
    mono = np.sort(rng.uniform(0, 100, 30))
    assert np.array_equal(median_filter(sig(mono), window=5).volumes, mono)


def test_find_extrema_monotone_signal():
    peaks, troughs = find_extrema(sig(np.arange(50.0)))
    assert peaks == [] and troughs == []


def _sinusoid():
    t = np.arange(75.0)
    return sig(100.0 + 50.0 * np.sin(2.0 * np.pi * t / 25.0), fps=25.0)


def test_find_extrema_sinusoid():
    peaks, troughs = find_extrema(_sinusoid(), min_separation=5,
                                  min_prominence=5.0)
    assert len(peaks) >= 2  # interior maxima (kept peaks between troughs)
    # analytic maxima at t = 6.25 + 25k
    all_peaks, _ = find_extrema(_sinusoid(), min_separation=5)
    assert len(all_peaks) <= 3
    for p in peaks:
        nearest = min(abs(p - m) for m in (6.25, 31.25, 56.25))
        assert nearest <= 1.0
    # alternation: exactly one peak strictly between adjacent troughs
    for t0, t1 in zip(troughs[:-1], troughs[1:]):
        assert sum(1 for p in peaks if t0 < p < t1) == 1


def test_segment_cycles_direct_construction():
    v = np.zeros(51)
    v[12] = 100.0
    v[37] = 100.0
    cycles = segment_cycles(sig(v), peaks=[12, 37], troughs=[0, 25, 50])
    assert [(c.start_frame, c.end_frame, c.ed_frame) for c in cycles] \
        == [(0, 25, 12), (25, 50, 37)]


def test_segment_cycles_no_contained_peak():
    with pytest.raises(NoCycles):
        segment_cycles(sig(np.ones(31)), peaks=[], troughs=[0, 30])


def test_segment_cycles_single_trough():
    with pytest.raises(NoCycles):
        segment_cycles(sig(np.ones(10)), peaks=[5], troughs=[2])


def test_sinusoid_cycles_ef():
    s = _sinusoid()
    peaks, troughs = find_extrema(s, min_separation=5, min_prominence=5.0)
    cycles = segment_cycles(s, peaks, troughs)
    assert len(cycles) == 2
    for c in cycles:
        assert c.ef == pytest.approx((150.0 - 50.0) / 150.0, abs=0.01)


def test_estimate_ef_examples():
    s = sig([50, 100, 50, 100, 50])

    def cycle(ef):
        v_ed = 100.0
        return segment_cycles(
            sig([v_ed * (1 - ef), v_ed, v_ed * (1 - ef)]),
            peaks=[1], troughs=[0, 2])[0]

    one = segment_cycles(sig([50, 100, 50]), peaks=[1], troughs=[0, 2])
    assert estimate_ef(one).ef_mean == pytest.approx(0.5)
    est = estimate_ef([cycle(0.4), cycle(0.6)])
    assert est.ef_mean == pytest.approx(0.5)
    est = estimate_ef([cycle(0.55), cycle(0.60), cycle(0.65)])
    assert est.ef_mean == pytest.approx(0.60)
    assert est.ef_class == "pEF"
    del s


def test_estimate_ef_empty_raises():
    with pytest.raises(NoCycles):
        estimate_ef([])


def test_ef_bounds_and_mean_between_extremes():
    rng = np.random.default_rng(29)
    t = np.arange(200.0)
    v = 120 + 60 * np.sin(2 * np.pi * t / 40) + rng.normal(0, 3, t.size)
    s = median_filter(sig(np.clip(v, 0, None), fps=50.0), window=5)
    peaks, troughs = find_extrema(s, min_separation=default_min_separation(
        50.0), min_prominence=0.05 * np.ptp(s.volumes))
    cycles = segment_cycles(s, peaks, troughs)
    efs = [c.ef for c in cycles]
    assert all(0.0 <= e < 1.0 for e in efs)
    est = estimate_ef(cycles)
    assert min(efs) <= est.ef_mean <= max(efs)


def test_ef_scale_invariance():
    t = np.arange(120.0)
    base = 100 + 40 * np.sin(2 * np.pi * t / 30)
    for scale in (0.001, 1.0, 1e6):
        s = sig(base * scale)
        peaks, troughs = find_extrema(s, min_separation=5,
                                      min_prominence=0.05 * np.ptp(s.volumes))
        est = estimate_ef(segment_cycles(s, peaks, troughs))
        if scale == 1.0:
            ref = est.ef_mean
    for scale in (0.001, 1e6):
        s = sig(base * scale)
        peaks, troughs = find_extrema(s, min_separation=5,
                                      min_prominence=0.05 * np.ptp(s.volumes))
        est = estimate_ef(segment_cycles(s, peaks, troughs))
        assert abs(est.ef_mean - ref) <= 1e-12


def test_default_min_separation():
    assert default_min_separation(None) == 5
    assert default_min_separation(10.0) == 5
    assert default_min_separation(50.0) == 12
