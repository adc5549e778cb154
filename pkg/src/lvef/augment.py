"""Simulated-previous-frame mask augmentation.

One augmented mask per (mask, seed): the contour is warped by a
thin-plate spline fitted on 5 uniformly indexed contour points with
random shifts of +/-10% of the mask bounding box, then scaled by a
random factor in [0.9, 1.1] about the foreground centroid and
translated by up to +/-10% of the frame size. The warped contour is
rasterized back to the original frame.

Randomness comes from ``numpy.random.default_rng`` (PCG64) so
augmentation streams are reproducible across platforms.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateWarp
from .geometry import polygon_is_simple
from .maskops import as_mask, extract_contour, rasterize_polygon
from .tps import apply_tps, fit_tps

__all__ = ["AffineParams", "sample_affine", "simulate_previous_mask",
           "N_CONTROL_POINTS", "SHIFT_FRAC"]

N_CONTROL_POINTS = 5
SHIFT_FRAC = 0.10       # control-point shift, fraction of mask bbox
SCALE_RANGE = (0.9, 1.1)
TRANSLATE_FRAC = 0.10   # translation, fraction of frame size
DISTORTION_BOUND = 0.25  # allowed non-rigid area change on top of scale
_MAX_ATTEMPTS = 3


@dataclass(frozen=True)
class AffineParams:
    """Random scale about the mask centroid plus frame translation."""
    scale: float
    translate_x: float
    translate_y: float

    def __post_init__(self):
        if self.scale <= 0:
            raise ValueError("scale must be positive")


def sample_affine(rng, frame_width, frame_height):
    """Draw affine parameters: scale in [0.9, 1.1], shift +/-10% of frame."""
    return AffineParams(
        scale=float(rng.uniform(*SCALE_RANGE)),
        translate_x=float(rng.uniform(-TRANSLATE_FRAC, TRANSLATE_FRAC)
                          * frame_width),
        translate_y=float(rng.uniform(-TRANSLATE_FRAC, TRANSLATE_FRAC)
                          * frame_height),
    )


def _control_indices(n_points):
    return (np.arange(N_CONTROL_POINTS) * n_points) // N_CONTROL_POINTS


def _warp_once(contour, centroid, frame_shape, rng):
    h, w = frame_shape
    bbox = contour.max(axis=0) - contour.min(axis=0)
    src = contour[_control_indices(contour.shape[0])]
    shifts = np.column_stack([
        rng.uniform(-SHIFT_FRAC, SHIFT_FRAC, N_CONTROL_POINTS) * bbox[0],
        rng.uniform(-SHIFT_FRAC, SHIFT_FRAC, N_CONTROL_POINTS) * bbox[1],
    ])
    params = sample_affine(rng, w, h)
    warp = fit_tps(src, src + shifts)
    warped = apply_tps(warp, contour)
    # affine applied after the non-rigid deformation (fixed composition
    # order so a seed fully determines the output)
    warped = centroid + params.scale * (warped - centroid)
    warped += np.array([params.translate_x, params.translate_y])
    return warped


def simulate_previous_mask(mask, rng_seed):
    """Generate one simulated previous-frame mask, deterministically.

    Retries with a fresh sub-stream (up to 3 attempts) when the warped
    contour self-intersects, leaves the frame, or rasterizes to an
    empty mask; raises ``DegenerateWarp`` after the last attempt.
    """
    m = as_mask(mask)
    h, w = m.shape
    contour = extract_contour(m)
    ys, xs = np.nonzero(m)
    centroid = np.array([xs.mean(), ys.mean()])

    last_reason = ""
    for attempt in range(_MAX_ATTEMPTS):
        rng = np.random.default_rng([int(rng_seed), attempt])
        warped = _warp_once(contour, centroid, (h, w), rng)
        if not polygon_is_simple(warped):
            last_reason = "self-intersecting contour"
            continue
        if warped[:, 0].max() < 0 or warped[:, 0].min() > w - 1 \
                or warped[:, 1].max() < 0 or warped[:, 1].min() > h - 1:
            last_reason = "contour left the frame"
            continue
        out = rasterize_polygon(warped, w, h)
        if not out.any():
            last_reason = "empty rasterization"
            continue
        # keep the output area inside the affine scale range widened by
        # the non-rigid distortion allowance
        ratio = float(out.sum()) / float(m.sum())
        lo = SCALE_RANGE[0] ** 2 * (1.0 - DISTORTION_BOUND)
        hi = SCALE_RANGE[1] ** 2 * (1.0 + DISTORTION_BOUND)
        if not lo <= ratio <= hi:
            last_reason = f"area ratio {ratio:.3f} outside [{lo:.3f}, {hi:.3f}]"
            continue
        return out
    raise DegenerateWarp(
        f"augmentation failed after {_MAX_ATTEMPTS} attempts: {last_reason}")
