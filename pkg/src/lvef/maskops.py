"""Binary-mask operations: contour tracing, area, rasterization.

Masks are ``(height, width)`` uint8 arrays of {0, 1}; pixel (x, y)
is ``mask[y, x]``. Contours are (n, 2) float arrays of (x, y) pixel
centers. All per-pixel loops live in :mod:`lvef.kernels`.
"""

import numpy as np

from . import kernels
from .errors import DegenerateRegion, EmptyMask
from .geometry import shoelace_area

__all__ = ["as_mask", "largest_component", "mask_area", "extract_contour",
           "rasterize_polygon"]


def as_mask(arr):
    """Validate and normalize a binary mask to a uint8 array of {0, 1}."""
    m = np.asarray(arr)
    if m.ndim != 2:
        raise ValueError("mask must be 2-D")
    if m.dtype != np.uint8:
        m = m.astype(np.uint8)
    if m.size and m.max() > 1:
        raise ValueError("mask pixels must be 0 or 1")
    return np.ascontiguousarray(m)


def largest_component(mask):
    """Largest 8-connected foreground component as a new mask."""
    comp, _ = kernels.label_largest_component(as_mask(mask))
    return comp


def mask_area(mask):
    """Foreground pixel count of the largest 8-connected component.

    Empty masks yield 0.0. The area is a pixel count rather than a
    polygon area, matching the pixel-unit convention used throughout.
    """
    _, area = kernels.label_largest_component(as_mask(mask))
    return float(area)


def extract_contour(mask):
    """Ordered boundary of the largest foreground component.

    Moore-neighbour tracing over pixel centers; smaller components are
    ignored. The returned (n, 2) float array is ordered counterclockwise
    (positive shoelace area).

    Raises
    ------
    EmptyMask
        when no foreground pixel exists.
    DegenerateRegion
        when the largest component has fewer than 3 boundary pixels.
    """
    m = as_mask(mask)
    comp, area = kernels.label_largest_component(m)
    if area == 0:
        raise EmptyMask("mask has no foreground pixel")
    trace = kernels.moore_trace(comp)
    pts = np.asarray(trace, dtype=np.float64)
    distinct = np.unique(trace, axis=0).shape[0]
    if distinct < 3:
        raise DegenerateRegion(
            f"largest component has only {distinct} boundary pixel(s)")
    # drop the duplicated closing point, if the trace ended on the start
    if pts.shape[0] > 1 and np.array_equal(pts[0], pts[-1]):
        pts = pts[:-1]
    if shoelace_area(pts) < 0:
        pts = pts[::-1]
    return np.ascontiguousarray(pts)


def rasterize_polygon(poly, width, height):
    """Rasterize a closed polygon into a binary mask.

    A pixel is foreground iff its center lies inside the polygon under
    the even-odd rule, or exactly on its boundary. Geometry outside the
    grid is clipped.
    """
    if width <= 0 or height <= 0:
        raise ValueError("width and height must be positive")
    p = np.asarray(poly, dtype=np.float64)
    if p.ndim != 2 or p.shape[1] != 2 or p.shape[0] < 3:
        raise ValueError("polygon must be an (n >= 3, 2) array")
    return kernels.fill_polygon(
        np.ascontiguousarray(p[:, 0]), np.ascontiguousarray(p[:, 1]),
        int(width), int(height))
