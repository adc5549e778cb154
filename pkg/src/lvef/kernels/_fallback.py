"""Pure-Python (numpy) implementations of the per-pixel kernels.

Used when the compiled extension is unavailable or when
``LVEF_PURE_PYTHON=1`` is set. Outputs are bit-identical to the
compiled versions in ``_core``.
"""

from collections import deque

import numpy as np

# Clockwise Moore neighbourhood in screen coordinates (x right, y down),
# starting at the western neighbour.
_OFFSETS = ((-1, 0), (-1, -1), (0, -1), (1, -1), (1, 0), (1, 1), (0, 1), (-1, 1))
_OFFSET_INDEX = {off: k for k, off in enumerate(_OFFSETS)}


def label_largest_component(mask):
    """Extract the largest 8-connected foreground component.

    Parameters
    ----------
    mask : (H, W) uint8 array of {0, 1}

    Returns
    -------
    component : (H, W) uint8 array, the largest component only
    area : int, number of pixels in it (0 when the mask is empty)
    """
    mask = np.ascontiguousarray(mask, dtype=np.uint8)
    h, w = mask.shape
    labels = np.zeros((h, w), dtype=np.int32)
    best_label = 0
    best_area = 0
    next_label = 0
    for sy in range(h):
        row = mask[sy]
        for sx in range(w):
            if row[sx] and not labels[sy, sx]:
                next_label += 1
                area = 0
                queue = deque([(sx, sy)])
                labels[sy, sx] = next_label
                while queue:
                    x, y = queue.popleft()
                    area += 1
                    for dx, dy in _OFFSETS:
                        nx, ny = x + dx, y + dy
                        if 0 <= nx < w and 0 <= ny < h \
                                and mask[ny, nx] and not labels[ny, nx]:
                            labels[ny, nx] = next_label
                            queue.append((nx, ny))
                if area > best_area:
                    best_area = area
                    best_label = next_label
    if best_label == 0:
        return np.zeros((h, w), dtype=np.uint8), 0
    return (labels == best_label).astype(np.uint8), int(best_area)


def moore_trace(mask):
    """Trace the outer boundary of a single-component mask.

    Moore-neighbour tracing with repeated-state termination. The walk
    starts at the first foreground pixel in row-major order and
    proceeds with a clockwise neighbourhood scan; every boundary pixel
    is visited in order (pixels on one-pixel-wide spurs may repeat).

    Returns an (N, 2) int32 array of (x, y) pixel coordinates.
    """
    mask = np.ascontiguousarray(mask, dtype=np.uint8)
    h, w = mask.shape
    start = None
    for y in range(h):
        xs = np.flatnonzero(mask[y])
        if xs.size:
            start = (int(xs[0]), y)
            break
    if start is None:
        return np.zeros((0, 2), dtype=np.int32)

    sx, sy = start
    contour = [start]
    backtrack = (sx - 1, sy)
    current = start
    seen = {(current, backtrack)}
    while True:
        cx, cy = current
        bidx = _OFFSET_INDEX[(backtrack[0] - cx, backtrack[1] - cy)]
        found = None
        for k in range(1, 9):
            dx, dy = _OFFSETS[(bidx + k) % 8]
            nx, ny = cx + dx, cy + dy
            if 0 <= nx < w and 0 <= ny < h and mask[ny, nx]:
                pdx, pdy = _OFFSETS[(bidx + k - 1) % 8]
                found = (nx, ny)
                backtrack = (cx + pdx, cy + pdy)
                break
        if found is None:
            break  # isolated pixel
        state = (found, backtrack)
        if state in seen:
            break
        seen.add(state)
        contour.append(found)
        current = found
    return np.asarray(contour, dtype=np.int32)


def fill_polygon(xs, ys, width, height):
    """Rasterize a closed polygon with the even-odd rule.

    A pixel is set when its integer-coordinate center is strictly
    inside the polygon (even-odd crossing count) or lies on an edge.

    Parameters
    ----------
    xs, ys : float64 arrays of vertex coordinates (implicitly closed)
    width, height : output grid size

    Returns an (height, width) uint8 mask.
    """
    xs = np.asarray(xs, dtype=np.float64)
    ys = np.asarray(ys, dtype=np.float64)
    out = np.zeros((height, width), dtype=np.uint8)
    n = xs.size
    if n < 3:
        return out
    x1 = xs
    y1 = ys
    x2 = np.roll(xs, -1)
    y2 = np.roll(ys, -1)
    eps = 1e-9 * max(1.0, np.abs(xs).max(), np.abs(ys).max())

    ylo = max(0, int(np.ceil(ys.min())))
    yhi = min(height - 1, int(np.floor(ys.max())))

    # interior: even-odd crossings per scanline through pixel centers
    dy = y2 - y1
    for y in range(ylo, yhi + 1):
        crossing = ((y1 <= y) & (y < y2)) | ((y2 <= y) & (y < y1))
        if not crossing.any():
            continue
        t = (y - y1[crossing]) / dy[crossing]
        cross_x = x1[crossing] + t * (x2[crossing] - x1[crossing])
        cross_x.sort()
        for a, b in zip(cross_x[0::2], cross_x[1::2]):
            lo = max(0, int(np.ceil(a - eps)))
            hi = min(width - 1, int(np.floor(b + eps)))
            if lo <= hi:
                out[y, lo:hi + 1] = 1

    # boundary: pixel centers lying exactly on an edge
    for i in range(n):
        ax, ay, bx, by = x1[i], y1[i], x2[i], y2[i]
        if abs(by - ay) > eps:
            lo = int(np.ceil(min(ay, by) - eps))
            hi = int(np.floor(max(ay, by) + eps))
            for y in range(max(0, lo), min(height - 1, hi) + 1):
                x = ax + (y - ay) * (bx - ax) / (by - ay)
                xi = int(round(x))
                if abs(x - xi) <= eps and 0 <= xi < width:
                    out[y, xi] = 1
        else:
            y = int(round(ay))
            if abs(ay - y) <= eps and 0 <= y < height:
                lo = max(0, int(np.ceil(min(ax, bx) - eps)))
                hi = min(width - 1, int(np.floor(max(ax, bx) + eps)))
                if lo <= hi:
                    out[y, lo:hi + 1] = 1
    return out
