"""Beat analysis: filtering, extrema detection, cycle segmentation, EF.

The per-frame volume series is median filtered, peaks (end-diastole
candidates) and troughs (end-systole candidates) are detected, each
cardiac cycle spans adjacent troughs, and the video-level ejection
fraction is the unweighted mean of the per-cycle values
EF_k = (V_ED - V_ES) / V_ED.
"""

from dataclasses import dataclass, field

import numpy as np
from scipy.signal import find_peaks

from .errors import InvalidWindow, NoCycles
from .metrics import classify_ef

__all__ = ["VolumeSignal", "CardiacCycle", "EfEstimate", "median_filter",
           "find_extrema", "segment_cycles", "estimate_ef",
           "DEFAULT_MEDIAN_WINDOW", "default_min_separation",
           "DEFAULT_PROMINENCE_FRAC"]

# 5 frames kills single-frame glitches
# without flattening end-systolic troughs at typical frame rates
DEFAULT_MEDIAN_WINDOW = 5
DEFAULT_PROMINENCE_FRAC = 0.05


def default_min_separation(fps):
    """Default minimum extremum separation: max(5, fps/4) frames."""
    if fps is None or fps <= 0:
        return 5
    return max(5, int(round(fps / 4.0)))


@dataclass(frozen=True)
class VolumeSignal:
    """Per-frame volume series (pixels^3) with optional frame rate."""
    volumes: np.ndarray
    fps: float | None = None

    def __post_init__(self):
        v = np.asarray(self.volumes, dtype=np.float64)
        if v.ndim != 1 or v.size < 1:
            raise ValueError("volumes must be a non-empty 1-D sequence")
        if not np.isfinite(v).all() or (v < 0).any():
            raise ValueError("volumes must be finite and non-negative")
        object.__setattr__(self, "volumes", v)

    def __len__(self):
        return self.volumes.size


@dataclass(frozen=True)
class CardiacCycle:
    """One cardiac cycle between adjacent troughs."""
    start_frame: int
    end_frame: int
    ed_frame: int
    es_frame: int
    v_ed: float
    v_es: float
    ef: float


@dataclass(frozen=True)
class EfEstimate:
    """Per-cycle EFs with the video-level mean and EF-range class."""
    cycles: list
    ef_mean: float
    ef_class: str = field(default="")


def median_filter(signal, window=DEFAULT_MEDIAN_WINDOW):
    """Median filter with replicate padding at the edges.

    ``window`` must be odd, >= 1 and <= 2*len(signal) - 1. Output length
    equals input length; a window of 1 is the identity.
    """
    if window < 1 or window % 2 == 0:
        raise InvalidWindow(f"window must be odd and positive, got {window}")
    v = signal.volumes
    if window > 2 * v.size - 1:
        raise InvalidWindow(
            f"window {window} too wide for signal of length {v.size}")
    if window == 1:
        return VolumeSignal(v.copy(), signal.fps)
    half = window // 2
    padded = np.pad(v, half, mode="edge")
    strided = np.lib.stride_tricks.sliding_window_view(padded, window)
    return VolumeSignal(np.median(strided, axis=1), signal.fps)


def find_extrema(signal, min_separation=5, min_prominence=0.0):
    """Locate alternating peaks and troughs of a volume signal.

    Local maxima and minima are detected with the given minimum frame
    separation and topographic prominence, then reconciled so that
    between two adjacent troughs exactly one peak (the largest) remains.

    Returns ``(peaks, troughs)`` as int lists; either may be empty.
    """
    if min_separation < 1:
        raise ValueError("min_separation must be >= 1")
    if min_prominence < 0:
        raise ValueError("min_prominence must be >= 0")
    v = signal.volumes
    prom = min_prominence if min_prominence > 0 else None
    peaks, _ = find_peaks(v, distance=min_separation, prominence=prom)
    troughs, _ = find_peaks(-v, distance=min_separation, prominence=prom)
    if troughs.size < 2:
        return list(map(int, peaks)), list(map(int, troughs))
    kept = []
    for t0, t1 in zip(troughs[:-1], troughs[1:]):
        inside = peaks[(peaks > t0) & (peaks < t1)]
        if inside.size:
            kept.append(int(inside[np.argmax(v[inside])]))
    return kept, list(map(int, troughs))


def segment_cycles(signal, peaks, troughs):
    """Build one cardiac cycle per adjacent trough pair with a peak.

    V_ED is the filtered volume at the contained peak; V_ES the smaller
    of the two bounding trough volumes. Cycles whose V_ED does not
    exceed V_ES are discarded. Raises ``NoCycles`` when fewer than two
    troughs exist or no trough pair contains a peak.
    """
    v = signal.volumes
    troughs = sorted(int(t) for t in troughs)
    peaks = sorted(int(p) for p in peaks)
    if len(troughs) < 2:
        raise NoCycles("need at least two troughs to bound a cycle")
    cycles = []
    for t0, t1 in zip(troughs[:-1], troughs[1:]):
        inside = [p for p in peaks if t0 < p < t1]
        if not inside:
            continue
        ed = max(inside, key=lambda p: v[p])
        es = t0 if v[t0] <= v[t1] else t1
        v_ed = float(v[ed])
        v_es = float(min(v[t0], v[t1]))
        if v_ed <= v_es:
            continue
        cycles.append(CardiacCycle(
            start_frame=t0, end_frame=t1, ed_frame=ed, es_frame=es,
            v_ed=v_ed, v_es=v_es, ef=(v_ed - v_es) / v_ed))
    if not cycles:
        raise NoCycles("no trough pair contains a peak")
    return cycles


def estimate_ef(cycles):
    """Video-level EF: unweighted mean of per-cycle EFs, plus its class."""
    if not cycles:
        raise NoCycles("no cycles to average")
    ef_mean = float(np.mean([c.ef for c in cycles]))
    return EfEstimate(cycles=list(cycles), ef_mean=ef_mean,
                      ef_class=classify_ef(ef_mean))
