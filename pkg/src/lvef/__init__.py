"""Geometric left-ventricular ejection-fraction estimation.

Computes per-frame LV volumes from binary segmentation masks with the
area-length (Simpson monoplane) method, segments the volume signal into
cardiac cycles, and averages per-cycle ejection fractions. Also ships
the TPS/affine mask-augmentation generator, segmentation/classification
metrics, a synthetic beating-LV oracle, and the ``lvef`` CLI.
"""

__version__ = "0.1.0"

from . import errors
from .augment import simulate_previous_mask
from .beats import (CardiacCycle, EfEstimate, VolumeSignal, estimate_ef,
                    find_extrema, median_filter, segment_cycles)
from .geometry import (convex_hull, min_enclosing_triangle,
                       ray_polygon_intersections, shoelace_area)
from .maskops import extract_contour, mask_area, rasterize_polygon
from .measure import (LvLandmarks, VolumeSample, locate_landmarks, lv_length,
                      volume_from_mask)
from .metrics import (classify_ef, confusion_and_scores, dice, mae, rmse)
from .pipeline import EstimateParams, EstimateReport, run_estimate
from .stackio import read_mask_stack, tracings_to_masks, write_mask_stack
from .synth import SynthConfig, generate_video
from .tps import TpsWarp, apply_tps, fit_tps

__all__ = [
    "errors", "__version__",
    "convex_hull", "min_enclosing_triangle", "ray_polygon_intersections",
    "shoelace_area", "extract_contour", "mask_area", "rasterize_polygon",
    "LvLandmarks", "VolumeSample", "locate_landmarks", "lv_length",
    "volume_from_mask",
    "VolumeSignal", "CardiacCycle", "EfEstimate", "median_filter",
    "find_extrema", "segment_cycles", "estimate_ef",
    "TpsWarp", "fit_tps", "apply_tps", "simulate_previous_mask",
    "dice", "mae", "rmse", "classify_ef", "confusion_and_scores",
    "SynthConfig", "generate_video",
    "EstimateParams", "EstimateReport", "run_estimate",
    "read_mask_stack", "write_mask_stack", "tracings_to_masks",
]
