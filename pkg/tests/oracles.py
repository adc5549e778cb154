"""Independent brute-force oracles used to validate the fast paths.

These deliberately avoid the library's own algorithms: the hull oracle
tests triangle containment over all triples, the enclosing-triangle
oracle enumerates flush-edge configurations with plain float tuples in
the unrotated frame, and point-in-polygon is a scalar crossing test.
"""

import math
from itertools import combinations

import numpy as np


def _cross2(u, v):
    return u[..., 0] * v[..., 1] - u[..., 1] * v[..., 0]


def brute_force_hull_vertices(points):
    """Hull vertices = points inside no triangle formed by other points.

    Returns the set of hull points (as tuples), order-free. Points on a
    hull edge between two vertices are treated as interior.
    """
    pts = np.asarray(points, dtype=np.float64)
    n = pts.shape[0]
    triples = np.array(list(combinations(range(n), 3)))
    a = pts[triples[:, 0]]
    b = pts[triples[:, 1]]
    c = pts[triples[:, 2]]
    hull = []
    for i in range(n):
        p = pts[i]
        other = ~np.any(triples == i, axis=1)
        aa, bb, cc = a[other], b[other], c[other]
        d1 = _cross2(bb - aa, p - aa)
        d2 = _cross2(cc - bb, p - bb)
        d3 = _cross2(aa - cc, p - cc)
        inside = ((d1 > 0) & (d2 > 0) & (d3 > 0)) \
            | ((d1 < 0) & (d2 < 0) & (d3 < 0))
        if not inside.any():
            hull.append(tuple(p))
    return set(hull)


def _line(a, b):
    """(nx, ny, c) with nx*x + ny*y = c."""
    return b[1] - a[1], a[0] - b[0], (b[1] - a[1]) * a[0] + (a[0] - b[0]) * a[1]


def _meet(l1, l2):
    (a1, b1, c1), (a2, b2, c2) = l1, l2
    det = a1 * b2 - a2 * b1
    if abs(det) < 1e-14:
        return None
    return ((c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det)


def _tri_area(tri):
    (ax, ay), (bx, by), (cx, cy) = tri
    return abs((bx - ax) * (cy - ay) - (by - ay) * (cx - ax)) / 2.0


def _tri_contains_all(tri, pts, tol):
    (ax, ay), (bx, by), (cx, cy) = tri
    area2 = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    if abs(area2) < 1e-12:
        return False
    sign = 1.0 if area2 > 0 else -1.0
    slack = tol * abs(area2) ** 0.5
    sides = (((ax, ay), (bx, by)), ((bx, by), (cx, cy)), ((cx, cy), (ax, ay)))
    for (px, py) in pts:
        for (ux, uy), (vx, vy) in sides:
            if sign * ((vx - ux) * (py - uy) - (vy - uy) * (px - ux)) < -slack:
                return False
    return True


def min_triangle_oracle(hull):
    """Exhaustive flush-edge enumeration of the minimal enclosing triangle.

    For each flush base edge, the other two sides are drawn either from
    the remaining edge lines or constructed so a hull vertex sits at the
    side's midpoint (the known optimality condition); every resulting
    triangle containing the hull competes on area.

    Returns ``(area, triangle)``.
    """
    pts = [tuple(p) for p in np.asarray(hull, dtype=np.float64)]
    n = len(pts)
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    span = max(max(xs) - min(xs), max(ys) - min(ys))
    tol = 1e-7 * span
    edges = [_line(pts[i], pts[(i + 1) % n]) for i in range(n)]

    best = math.inf
    best_tri = None
    for c in range(n):
        base = edges[c]
        others = [e for k, e in enumerate(edges) if k != c]
        candidates = []
        for i in range(len(others)):
            for j in range(i + 1, len(others)):
                candidates.append((others[i], others[j]))
        ncx, ncy, cc = base
        norm = math.hypot(ncx, ncy)
        for flush in others:
            for w in pts:
                height = (ncx * w[0] + ncy * w[1] - cc) / norm
                if abs(height) < 1e-12:
                    continue
                parallel = (ncx, ncy, cc + 2.0 * height * norm)
                apex = _meet(flush, parallel)
                if apex is None:
                    continue
                foot = (2.0 * w[0] - apex[0], 2.0 * w[1] - apex[1])
                if math.hypot(apex[0] - foot[0], apex[1] - foot[1]) < 1e-12:
                    continue
                candidates.append((flush, _line(foot, apex)))
        for l1, l2 in candidates:
            v0 = _meet(base, l1)
            v1 = _meet(base, l2)
            v2 = _meet(l1, l2)
            if v0 is None or v1 is None or v2 is None:
                continue
            tri = (v0, v1, v2)
            area = _tri_area(tri)
            if area < best and _tri_contains_all(tri, pts, tol):
                best = area
                best_tri = tri
    return best, best_tri


def point_in_polygon(x, y, poly, eps=1e-9):
    """Even-odd inside test with on-edge points counting as inside."""
    n = len(poly)
    inside = False
    for i in range(n):
        x1, y1 = poly[i]
        x2, y2 = poly[(i + 1) % n]
        # on-segment check
        dx, dy = x2 - x1, y2 - y1
        seg2 = dx * dx + dy * dy
        if seg2 > 0:
            t = ((x - x1) * dx + (y - y1) * dy) / seg2
            if 0.0 <= t <= 1.0:
                px, py = x1 + t * dx, y1 + t * dy
                if math.hypot(px - x, py - y) <= eps:
                    return True
        if (y1 <= y < y2) or (y2 <= y < y1):
            xc = x1 + (y - y1) * dx / dy
            if xc > x:
                inside = not inside
    return inside


def flood_fill_component_sizes(mask):
    """8-connected component sizes via recursive-free flood fill."""
    m = np.asarray(mask, dtype=np.uint8).copy()
    h, w = m.shape
    sizes = []
    for sy in range(h):
        for sx in range(w):
            if m[sy, sx]:
                stack = [(sx, sy)]
                m[sy, sx] = 0
                size = 0
                while stack:
                    x, y = stack.pop()
                    size += 1
                    for dx in (-1, 0, 1):
                        for dy in (-1, 0, 1):
                            nx, ny = x + dx, y + dy
                            if 0 <= nx < w and 0 <= ny < h and m[ny, nx]:
                                m[ny, nx] = 0
                                stack.append((nx, ny))
                sizes.append(size)
    return sorted(sizes, reverse=True)
