"""Planar geometry primitives: hulls, enclosing triangles, intersections.

All functions take and return plain ``(n, 2)`` float64 numpy arrays of
(x, y) coordinates. Polygons are implicitly closed. "Counterclockwise"
means positive shoelace signed area in the (x, y) frame as given.
"""

import numpy as np

from .errors import DegenerateInput

__all__ = [
    "shoelace_area",
    "convex_hull",
    "min_enclosing_triangle",
    "ray_polygon_intersections",
    "polygon_is_simple",
    "triangle_contains",
]


def shoelace_area(poly):
    """Signed polygon area (positive for counterclockwise order)."""
    p = np.asarray(poly, dtype=np.float64)
    x, y = p[:, 0], p[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y))


def _bbox_diag(points):
    p = np.asarray(points, dtype=np.float64)
    span = p.max(axis=0) - p.min(axis=0)
    return float(np.hypot(span[0], span[1]))


def convex_hull(points):
    """Convex hull of a point set (Andrew monotone chain).

    Returns hull vertices in counterclockwise order with no three
    consecutive collinear vertices. Raises ``DegenerateInput`` for
    fewer than 3 distinct points or an all-collinear set.
    """
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError("points must be an (n, 2) array")
    if not np.isfinite(pts).all():
        raise DegenerateInput("non-finite coordinates")
    uniq = np.unique(pts, axis=0)
    if uniq.shape[0] < 3:
        raise DegenerateInput("fewer than 3 distinct points")
    diag = _bbox_diag(uniq)
    eps = 1e-12 * diag * diag

    order = np.lexsort((uniq[:, 1], uniq[:, 0]))
    sorted_pts = uniq[order]

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    def build(seq):
        chain = []
        for p in seq:
            while len(chain) >= 2 and cross(chain[-2], chain[-1], p) <= eps:
                chain.pop()
            chain.append(p)
        return chain

    lower = build(sorted_pts)
    upper = build(sorted_pts[::-1])
    hull = np.array(lower[:-1] + upper[:-1], dtype=np.float64)
    if hull.shape[0] < 3:
        raise DegenerateInput("all points are collinear")
    return hull


def _validate_convex_ccw(hull, tol):
    n = hull.shape[0]
    if n < 3:
        raise DegenerateInput("hull needs at least 3 vertices")
    a = hull
    b = np.roll(hull, -1, axis=0)
    c = np.roll(hull, -2, axis=0)
    cross = (b[:, 0] - a[:, 0]) * (c[:, 1] - a[:, 1]) \
        - (b[:, 1] - a[:, 1]) * (c[:, 0] - a[:, 0])
    if np.any(cross <= tol):
        raise DegenerateInput("polygon is not strictly convex counterclockwise")


def min_enclosing_triangle(hull):
    """Minimum-area triangle enclosing a convex polygon.

    The optimum is known to have one side flush with a hull edge, and
    each remaining side either flush or touching the hull at the side's
    midpoint. For every flush base edge the search therefore considers
    flush/flush and flush/midpoint configurations of the other two
    sides, all evaluated in a frame where the base is the x-axis.

    Parameters
    ----------
    hull : (n, 2) array, strictly convex, counterclockwise

    Returns
    -------
    (3, 2) float64 array of triangle vertices (counterclockwise).
    """
    pts = np.asarray(hull, dtype=np.float64)
    diag = _bbox_diag(pts)
    if diag == 0.0:
        raise DegenerateInput("degenerate hull")
    _validate_convex_ccw(pts, 1e-12 * diag * diag)
    n = pts.shape[0]
    tol = 1e-9 * diag

    best_area = np.inf
    best = None  # (c-index, feet/apex in rotated frame, frame)

    idx1 = np.arange(n)
    idx2 = (idx1 + 1) % n

    for c in range(n):
        p = pts[c]
        q = pts[(c + 1) % n]
        ex = q - p
        ex = ex / np.hypot(ex[0], ex[1])
        ey = np.array([-ex[1], ex[0]])
        u = (pts - p) @ ex
        v = (pts - p) @ ey
        vmax = v.max()

        # candidate support lines u = m*v + u0 from non-horizontal edges
        dv = v[idx2] - v[idx1]
        ok = np.abs(dv) > 1e-12 * diag
        m = (u[idx2][ok] - u[idx1][ok]) / dv[ok]
        u0 = u[idx1][ok] - m * v[idx1][ok]
        # which side of each line the hull lies on
        resid = m[:, None] * v[None, :] + u0[:, None] - u[None, :]
        is_right = (resid >= -tol).all(axis=1)  # hull has u <= line
        is_left = (resid <= tol).all(axis=1)

        mr, u0r = m[is_right], u0[is_right]
        ml, u0l = m[is_left], u0[is_left]

        # flush/flush: apex at the crossing of a right and a left support
        if mr.size and ml.size:
            denom = mr[:, None] - ml[None, :]
            with np.errstate(divide="ignore", invalid="ignore"):
                vstar = (u0l[None, :] - u0r[:, None]) / denom
            base = u0r[:, None] - u0l[None, :]
            valid = (np.abs(denom) > 1e-12) & (vstar > tol) & (base > tol)
            if valid.any():
                area = np.where(valid, 0.5 * base * vstar, np.inf)
                i, j = np.unravel_index(np.argmin(area), area.shape)
                if area[i, j] < best_area:
                    best_area = float(area[i, j])
                    apex = np.array([mr[i] * vstar[i, j] + u0r[i], vstar[i, j]])
                    best = (p, ex, ey,
                            np.array([u0l[j], 0.0]), np.array([u0r[i], 0.0]), apex)

        # flush/midpoint: one side flush, the other touching a vertex at
        # its own midpoint; the apex then sits on the flush line at twice
        # the vertex height
        wsel = (2.0 * v >= vmax - tol) & (v > tol)
        if not wsel.any() or not m.size:
            continue
        uw = u[wsel]
        vw = v[wsel]
        apex_v = 2.0 * vw  # (W,)
        apex_u = m[:, None] * apex_v[None, :] + u0[:, None]  # (K, W)
        foot_u = 2.0 * uw[None, :] - apex_u  # foot of the non-flush side
        # support check for the constructed side (line through foot & apex)
        with np.errstate(divide="ignore", invalid="ignore"):
            mo = (apex_u - foot_u) / apex_v[None, :]
        ro = mo[:, :, None] * v[None, None, :] + foot_u[:, :, None] \
            - u[None, None, :]
        o_left = (ro <= tol).all(axis=2)
        o_right = (ro >= -tol).all(axis=2)
        flush_right = is_right[:, None]
        # non-flush side must support the hull from the opposite side
        valid = np.where(flush_right, o_left, o_right)
        base = np.where(flush_right, u0[:, None] - foot_u, foot_u - u0[:, None])
        valid &= base > tol
        valid &= (is_right | is_left)[:, None]
        if valid.any():
            area = np.where(valid, 0.5 * base * apex_v[None, :], np.inf)
            i, j = np.unravel_index(np.argmin(area), area.shape)
            if area[i, j] < best_area:
                best_area = float(area[i, j])
                apex = np.array([apex_u[i, j], apex_v[j]])
                if is_right[i]:
                    left_u, right_u = foot_u[i, j], u0[i]
                else:
                    left_u, right_u = u0[i], foot_u[i, j]
                best = (p, ex, ey,
                        np.array([left_u, 0.0]), np.array([right_u, 0.0]), apex)

    if best is None:
        raise DegenerateInput("no enclosing triangle found")
    p, ex, ey, fa, fb, apex = best
    frame = np.stack([ex, ey])
    tri = p + np.array([fa, fb, apex]) @ frame
    if shoelace_area(tri) < 0:
        tri = tri[::-1]
    return tri


def triangle_contains(tri, points, tol=0.0):
    """True where each point lies inside/on the triangle (within tol)."""
    t = np.asarray(tri, dtype=np.float64)
    if shoelace_area(t) < 0:
        t = t[::-1]
    p = np.atleast_2d(np.asarray(points, dtype=np.float64))
    inside = np.ones(p.shape[0], dtype=bool)
    for k in range(3):
        a, b = t[k], t[(k + 1) % 3]
        cross = (b[0] - a[0]) * (p[:, 1] - a[1]) - (b[1] - a[1]) * (p[:, 0] - a[0])
        inside &= cross >= -tol
    return inside


def ray_polygon_intersections(p0, direction, poly):
    """Intersections of a ray with a polygon boundary.

    Returns an (k, 2) array of intersection points sorted by increasing
    ray parameter; a hit at a shared vertex is reported once. The ray
    starts at ``p0`` and runs along ``direction`` (need not be unit).
    """
    p0 = np.asarray(p0, dtype=np.float64)
    d = np.asarray(direction, dtype=np.float64)
    poly = np.asarray(poly, dtype=np.float64)
    if poly.shape[0] < 3:
        raise DegenerateInput("polygon needs at least 3 vertices")
    norm = np.hypot(d[0], d[1])
    if norm == 0.0:
        raise DegenerateInput("zero ray direction")
    diag = max(_bbox_diag(poly), 1e-30)
    eps = 1e-12
    a = poly
    b = np.roll(poly, -1, axis=0)
    e = b - a
    denom = d[0] * e[:, 1] - d[1] * e[:, 0]
    w = a - p0
    with np.errstate(divide="ignore", invalid="ignore"):
        t = (w[:, 0] * e[:, 1] - w[:, 1] * e[:, 0]) / denom
        s = (w[:, 0] * d[1] - w[:, 1] * d[0]) / denom
    hit = (np.abs(denom) > eps * norm * diag) \
        & (t >= -1e-12) & (s >= -1e-9) & (s <= 1.0 + 1e-9)
    if not hit.any():
        return np.zeros((0, 2), dtype=np.float64)
    tt = t[hit]
    points = p0 + tt[:, None] * d
    order = np.argsort(tt)
    points = points[order]
    # merge duplicate vertex hits
    dedup_tol = 1e-9 * diag
    keep = [0]
    for i in range(1, points.shape[0]):
        if np.hypot(*(points[i] - points[keep[-1]])) > dedup_tol:
            keep.append(i)
    return points[keep]


def polygon_is_simple(poly, eps=1e-12):
    """True when no two non-adjacent polygon edges intersect."""
    p = np.asarray(poly, dtype=np.float64)
    n = p.shape[0]
    if n < 3:
        return False
    a = p
    b = np.roll(p, -1, axis=0)
    for i in range(n - 2):
        # skip adjacent edges (i-1, i, i+1) and the wraparound neighbour
        j0 = i + 2
        j1 = n if i > 0 else n - 1
        if j0 >= j1:
            continue
        a2 = a[j0:j1]
        b2 = b[j0:j1]
        d1 = b[i] - a[i]
        d2 = b2 - a2
        w = a2 - a[i]
        denom = d1[0] * d2[:, 1] - d1[1] * d2[:, 0]
        with np.errstate(divide="ignore", invalid="ignore"):
            t = (w[:, 0] * d2[:, 1] - w[:, 1] * d2[:, 0]) / denom
            s = (w[:, 0] * d1[1] - w[:, 1] * d1[0]) / denom
        crossing = (np.abs(denom) > eps) \
            & (t > eps) & (t < 1 - eps) & (s > eps) & (s < 1 - eps)
        if crossing.any():
            return False
    return True
