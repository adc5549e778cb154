"""Landmark localization and area-length volume measurement.

Pipeline per frame: contour -> convex hull -> minimum enclosing
triangle -> annulus/apex landmarks -> midline -> chamber length ->
volume = 8*A^2 / (3*pi*L), with A in pixels^2 and L in pixels.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import AmbiguousLandmarks, NoMidlineIntersection
from .geometry import convex_hull, min_enclosing_triangle, \
    ray_polygon_intersections
from .maskops import extract_contour, mask_area

__all__ = ["LvLandmarks", "VolumeSample", "locate_landmarks", "lv_length",
           "volume_from_mask", "area_length_volume"]

# relative margin below which apex/annulus selection counts as a tie
_MARGIN_RTOL = 1e-6
# relative length change above which a tie is reported as ambiguous
_LENGTH_CHANGE_LIMIT = 0.05


@dataclass(frozen=True)
class LvLandmarks:
    """Mitral annulus bounds, apex, and midline geometry for one frame."""
    annulus_a: np.ndarray
    annulus_b: np.ndarray
    apex: np.ndarray
    base_midpoint: np.ndarray
    midline_foot: np.ndarray
    selection_margin: float  # gap between 2nd and 3rd vertex-to-contour distances


@dataclass(frozen=True)
class VolumeSample:
    """Area-length volume for one frame (pixel units)."""
    frame_index: int
    area: float
    length: float
    volume: float
    landmarks: LvLandmarks | None = field(default=None, compare=False)


def _closest_on_polyline(point, contour):
    """Closest point on the closed polyline and its distance."""
    a = contour
    b = np.roll(contour, -1, axis=0)
    e = b - a
    w = point - a
    seg_len2 = np.einsum("ij,ij->i", e, e)
    seg_len2 = np.where(seg_len2 == 0.0, 1.0, seg_len2)
    t = np.clip(np.einsum("ij,ij->i", w, e) / seg_len2, 0.0, 1.0)
    proj = a + t[:, None] * e
    d2 = np.einsum("ij,ij->i", (proj - point), (proj - point))
    k = int(np.argmin(d2))
    return proj[k].copy(), math.sqrt(float(d2[k]))


def _midline_foot(apex, base_midpoint, contour):
    direction = base_midpoint - apex
    if np.hypot(*direction) == 0.0:
        raise NoMidlineIntersection("apex coincides with base midpoint")
    hits = ray_polygon_intersections(apex, direction, contour)
    # ignore grazing hits at the apex itself
    dists = np.hypot(hits[:, 0] - apex[0], hits[:, 1] - apex[1]) \
        if hits.size else np.zeros(0)
    span = np.hypot(*direction)
    good = dists > 1e-9 * max(span, 1.0)
    if not good.any():
        raise NoMidlineIntersection("midline ray does not cross the contour")
    return hits[np.argmax(np.where(good, dists, -np.inf))].copy()


def locate_landmarks(contour, triangle):
    """Derive annulus points, apex, and midline foot from the triangle.

    For each triangle vertex the closest point on the contour polyline
    is found. The two vertices closest to the contour are basal (the
    flush triangle side hugs the flat mitral plane) and give the annulus
    points; the remaining vertex gives the apex. The midline runs from
    the apex through the annulus midpoint; its farthest crossing of the
    contour is the basal foot.

    Raises ``AmbiguousLandmarks`` when the apex choice is a near-tie AND
    swapping it changes the chamber length by more than 5%.
    """
    contour = np.asarray(contour, dtype=np.float64)
    tri = np.asarray(triangle, dtype=np.float64)
    closest = []
    dists = []
    for v in tri:
        pnt, d = _closest_on_polyline(v, contour)
        closest.append(pnt)
        dists.append(d)
    order = np.argsort(np.asarray(dists), kind="stable")

    def build(apex_idx, base_idx):
        base_pts = sorted((closest[k] for k in base_idx),
                          key=lambda p: (p[0], p[1]))
        annulus_a, annulus_b = base_pts
        apex = closest[apex_idx]
        base_mid = 0.5 * (annulus_a + annulus_b)
        foot = _midline_foot(apex, base_mid, contour)
        return LvLandmarks(annulus_a, annulus_b, apex, base_mid, foot,
                           margin)

    margin = float(dists[order[2]] - dists[order[1]])
    landmarks = build(order[2], (order[0], order[1]))

    span = contour.max(axis=0) - contour.min(axis=0)
    diag = float(np.hypot(span[0], span[1]))
    if margin < _MARGIN_RTOL * diag:
        # near-tie: check whether the alternative apex assignment matters
        try:
            alt = build(order[1], (order[0], order[2]))
        except NoMidlineIntersection:
            return landmarks
        length = lv_length(landmarks)
        alt_length = lv_length(alt)
        change = abs(alt_length - length) / max(length, 1e-30)
        if change > _LENGTH_CHANGE_LIMIT:
            raise AmbiguousLandmarks(
                f"apex selection margin {margin:.3g} is a tie and the "
                f"alternative changes length by {change:.1%}",
                margin=margin, length_change=change)
    return landmarks


def lv_length(landmarks):
    """Chamber length: distance from apex to the midline foot (pixels)."""
    d = landmarks.midline_foot - landmarks.apex
    return float(np.hypot(d[0], d[1]))


def area_length_volume(area, length):
    """Ellipsoid-model volume from area (px^2) and length (px)."""
    return 8.0 * area * area / (3.0 * math.pi * length)


def volume_from_mask(mask, frame_index=0):
    """Full single-frame measurement from a binary mask.

    Runs contour extraction through volume computation and returns a
    :class:`VolumeSample` carrying the landmarks used. Geometry errors
    (EmptyMask, DegenerateRegion, NoMidlineIntersection, ...) propagate
    so callers can flag the frame as invalid.
    """
    area = mask_area(mask)
    contour = extract_contour(mask)
    hull = convex_hull(contour)
    tri = min_enclosing_triangle(hull)
    landmarks = locate_landmarks(contour, tri)
    length = lv_length(landmarks)
    return VolumeSample(frame_index=frame_index, area=area, length=length,
                        volume=area_length_volume(area, length),
                        landmarks=landmarks)
