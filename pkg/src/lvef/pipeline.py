"""Video-level orchestration: masks -> volumes -> beats -> EF report."""

import json
from dataclasses import dataclass, field

import numpy as np

from . import beats
from .errors import LvefError, NoCycles
from .measure import volume_from_mask

__all__ = ["EstimateParams", "FrameDiagnostics", "EstimateReport",
           "run_estimate", "SCHEMA_VERSION"]

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class EstimateParams:
    """Tunable beat-analysis parameters, recorded in every report."""
    median_window: int = beats.DEFAULT_MEDIAN_WINDOW
    min_separation: int | None = None  # None -> max(5, fps/4)
    min_prominence_frac: float = beats.DEFAULT_PROMINENCE_FRAC

    def resolved_separation(self, fps):
        if self.min_separation is not None:
            return self.min_separation
        return beats.default_min_separation(fps)


@dataclass(frozen=True)
class FrameDiagnostics:
    frame: int
    valid: bool
    area: float | None = None
    length: float | None = None
    volume: float | None = None
    apex: tuple | None = None
    annulus_a: tuple | None = None
    annulus_b: tuple | None = None
    midline_foot: tuple | None = None
    selection_margin: float | None = None
    error: str | None = None


@dataclass
class EstimateReport:
    """Everything the pipeline measured for one video.

    Serializes to a versioned JSON schema carrying raw and filtered
    volumes, per-frame landmark diagnostics, the detected cycles, the
    mean EF with its class, and any warnings.
    """
    video_id: str
    fps: float | None
    params: EstimateParams
    frames: list
    volumes_raw: list            # None per invalid frame
    volumes_interpolated: list
    volumes_filtered: list
    cycles: list = field(default_factory=list)
    ef_mean: float | None = None
    ef_class: str | None = None
    warnings: list = field(default_factory=list)

    def to_dict(self):
        return {
            "schema_version": SCHEMA_VERSION,
            "video_id": self.video_id,
            "fps": self.fps,
            "params": {
                "median_window": self.params.median_window,
                "min_separation": self.params.resolved_separation(self.fps),
                "min_prominence_frac": self.params.min_prominence_frac,
            },
            "n_frames": len(self.frames),
            "volumes_raw": self.volumes_raw,
            "volumes_interpolated": self.volumes_interpolated,
            "volumes_filtered": self.volumes_filtered,
            "frames": [vars(f).copy() for f in self.frames],
            "cycles": [vars(c).copy() for c in self.cycles],
            "ef_mean": self.ef_mean,
            "ef_class": self.ef_class,
            "warnings": list(self.warnings),
        }

    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent)


def _measure_frames(masks):
    frames = []
    raw = []
    warnings = []
    for i, mask in enumerate(masks):
        try:
            sample = volume_from_mask(mask, frame_index=i)
        except LvefError as exc:
            frames.append(FrameDiagnostics(
                frame=i, valid=False,
                error=f"{type(exc).__name__}: {exc}"))
            raw.append(None)
            warnings.append(f"frame {i} invalid: {type(exc).__name__}")
            continue
        lm = sample.landmarks
        frames.append(FrameDiagnostics(
            frame=i, valid=True, area=sample.area, length=sample.length,
            volume=sample.volume,
            apex=tuple(lm.apex.tolist()),
            annulus_a=tuple(lm.annulus_a.tolist()),
            annulus_b=tuple(lm.annulus_b.tolist()),
            midline_foot=tuple(lm.midline_foot.tolist()),
            selection_margin=lm.selection_margin))
        raw.append(sample.volume)
    return frames, raw, warnings


def _interpolate_invalid(raw):
    """Fill invalid (None) frames by linear interpolation over frame index."""
    values = np.array([np.nan if v is None else v for v in raw], dtype=float)
    valid = np.flatnonzero(~np.isnan(values))
    if valid.size == 0:
        return None
    idx = np.arange(values.size)
    return np.interp(idx, valid, values[valid])


def run_estimate(masks, fps=None, params=None, video_id=""):
    """Run the full estimation pipeline over one mask video.

    Per-frame volumes are measured, frames that fail any geometric step
    are linearly interpolated from valid neighbours, the signal is
    median filtered, and cycles are segmented into an EF estimate.
    When no cycle can be found the report is partial (volumes only)
    and carries a warning instead of raising.
    """
    if params is None:
        params = EstimateParams()
    if not masks:
        raise ValueError("need at least one frame")
    frames, raw, warnings = _measure_frames(masks)
    report = EstimateReport(video_id=video_id, fps=fps, params=params,
                            frames=frames, volumes_raw=raw,
                            volumes_interpolated=[], volumes_filtered=[],
                            warnings=warnings)
    interpolated = _interpolate_invalid(raw)
    if interpolated is None:
        report.warnings.append("no valid frames; no volumes computed")
        return report
    report.volumes_interpolated = interpolated.tolist()

    signal = beats.VolumeSignal(interpolated, fps)
    window = min(params.median_window, 2 * len(signal) - 1)
    if window % 2 == 0:
        window -= 1
    filtered = beats.median_filter(signal, window)
    report.volumes_filtered = filtered.volumes.tolist()

    dynamic = float(filtered.volumes.max() - filtered.volumes.min())
    prominence = params.min_prominence_frac * dynamic
    separation = params.resolved_separation(fps)
    peaks, troughs = beats.find_extrema(filtered, separation, prominence)
    try:
        cycles = beats.segment_cycles(filtered, peaks, troughs)
    except NoCycles as exc:
        report.warnings.append(f"NoCycles: {exc}")
        return report
    estimate = beats.estimate_ef(cycles)
    report.cycles = cycles
    report.ef_mean = estimate.ef_mean
    report.ef_class = estimate.ef_class
    return report
