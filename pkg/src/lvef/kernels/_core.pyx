# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the per-pixel kernels.

Semantics and outputs match ``_fallback`` bit-for-bit; see that module
for documentation.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport ceil, floor, round as c_round

cnp.import_array()

cdef int[8] OFF_X = [-1, -1, 0, 1, 1, 1, 0, -1]
cdef int[8] OFF_Y = [0, -1, -1, -1, 0, 1, 1, 1]


def label_largest_component(mask):
    mask = np.ascontiguousarray(mask, dtype=np.uint8)
    cdef cnp.uint8_t[:, ::1] m = mask
    cdef int h = m.shape[0]
    cdef int w = m.shape[1]
    labels_arr = np.zeros((h, w), dtype=np.int32)
    cdef cnp.int32_t[:, ::1] labels = labels_arr
    stack_arr = np.empty(h * w, dtype=np.int64)
    cdef cnp.int64_t[::1] stack = stack_arr
    cdef int best_label = 0, next_label = 0
    cdef long best_area = 0, area
    cdef long top
    cdef int sx, sy, x, y, nx, ny, k

    for sy in range(h):
        for sx in range(w):
            if m[sy, sx] and labels[sy, sx] == 0:
                next_label += 1
                area = 0
                top = 0
                stack[top] = sy * w + sx
                top += 1
                labels[sy, sx] = next_label
                while top > 0:
                    top -= 1
                    y = <int>(stack[top] // w)
                    x = <int>(stack[top] % w)
                    area += 1
                    for k in range(8):
                        nx = x + OFF_X[k]
                        ny = y + OFF_Y[k]
                        if 0 <= nx < w and 0 <= ny < h \
                                and m[ny, nx] and labels[ny, nx] == 0:
                            labels[ny, nx] = next_label
                            stack[top] = ny * w + nx
                            top += 1
                if area > best_area:
                    best_area = area
                    best_label = next_label
    if best_label == 0:
        return np.zeros((h, w), dtype=np.uint8), 0
    return (labels_arr == best_label).astype(np.uint8), int(best_area)


def moore_trace(mask):
    mask = np.ascontiguousarray(mask, dtype=np.uint8)
    cdef cnp.uint8_t[:, ::1] m = mask
    cdef int h = m.shape[0]
    cdef int w = m.shape[1]
    cdef int sx = -1, sy = -1
    cdef int x, y

    for y in range(h):
        for x in range(w):
            if m[y, x]:
                sx = x
                sy = y
                break
        if sx >= 0:
            break
    if sx < 0:
        return np.zeros((0, 2), dtype=np.int32)

    out_arr = np.empty((4 * h * w + 8, 2), dtype=np.int32)
    cdef cnp.int32_t[:, ::1] out = out_arr
    # state = (pixel, direction from pixel to its backtrack neighbour)
    seen_arr = np.zeros(h * w * 8, dtype=np.uint8)
    cdef cnp.uint8_t[::1] seen = seen_arr

    cdef int cx = sx, cy = sy
    cdef int bx = sx - 1, by = sy
    cdef long count = 1
    cdef int bidx, k, kk, nx, ny, pdx, pdy, d, dx, dy
    out[0, 0] = sx
    out[0, 1] = sy
    # mark initial state
    for k in range(8):
        if OFF_X[k] == bx - cx and OFF_Y[k] == by - cy:
            seen[(cy * w + cx) * 8 + k] = 1
            break

    while True:
        bidx = -1
        for k in range(8):
            if OFF_X[k] == bx - cx and OFF_Y[k] == by - cy:
                bidx = k
                break
        nx = -1
        for kk in range(1, 9):
            k = (bidx + kk) % 8
            nx = cx + OFF_X[k]
            ny = cy + OFF_Y[k]
            if 0 <= nx < w and 0 <= ny < h and m[ny, nx]:
                pdx = OFF_X[(bidx + kk - 1) % 8]
                pdy = OFF_Y[(bidx + kk - 1) % 8]
                bx = cx + pdx
                by = cy + pdy
                break
            nx = -1
        if nx < 0:
            break  # isolated pixel
        dx = bx - nx
        dy = by - ny
        d = -1
        for k in range(8):
            if OFF_X[k] == dx and OFF_Y[k] == dy:
                d = k
                break
        if seen[(ny * w + nx) * 8 + d]:
            break
        seen[(ny * w + nx) * 8 + d] = 1
        out[count, 0] = nx
        out[count, 1] = ny
        count += 1
        cx = nx
        cy = ny
    return np.ascontiguousarray(out_arr[:count])


def fill_polygon(xs, ys, int width, int height):
    xs = np.asarray(xs, dtype=np.float64)
    ys = np.asarray(ys, dtype=np.float64)
    out_arr = np.zeros((height, width), dtype=np.uint8)
    cdef int n = xs.shape[0]
    if n < 3:
        return out_arr
    cdef cnp.float64_t[::1] px = np.ascontiguousarray(xs)
    cdef cnp.float64_t[::1] py = np.ascontiguousarray(ys)
    cdef cnp.uint8_t[:, ::1] out = out_arr
    cdef double eps = 1e-9
    cdef double scale = 1.0
    cdef int i, j
    for i in range(n):
        if abs(px[i]) > scale:
            scale = abs(px[i])
        if abs(py[i]) > scale:
            scale = abs(py[i])
    eps = 1e-9 * scale

    cdef double ymin = py[0], ymax = py[0]
    for i in range(n):
        if py[i] < ymin:
            ymin = py[i]
        if py[i] > ymax:
            ymax = py[i]
    cdef int ylo = <int>ceil(ymin)
    cdef int yhi = <int>floor(ymax)
    if ylo < 0:
        ylo = 0
    if yhi > height - 1:
        yhi = height - 1

    cross_arr = np.empty(n, dtype=np.float64)
    cdef cnp.float64_t[::1] cross = cross_arr
    cdef int ncross, y, lo, hi, xi, c
    cdef double ax, ay, bx, by, t, xc, a, b

    for y in range(ylo, yhi + 1):
        ncross = 0
        for i in range(n):
            ax = px[i]
            ay = py[i]
            bx = px[(i + 1) % n]
            by = py[(i + 1) % n]
            if (ay <= y < by) or (by <= y < ay):
                t = (y - ay) / (by - ay)
                cross[ncross] = ax + t * (bx - ax)
                ncross += 1
        if ncross == 0:
            continue
        cross_arr[:ncross].sort()
        c = 0
        while c + 1 < ncross:
            a = cross[c]
            b = cross[c + 1]
            lo = <int>ceil(a - eps)
            hi = <int>floor(b + eps)
            if lo < 0:
                lo = 0
            if hi > width - 1:
                hi = width - 1
            for xi in range(lo, hi + 1):
                out[y, xi] = 1
            c += 2

    for i in range(n):
        ax = px[i]
        ay = py[i]
        bx = px[(i + 1) % n]
        by = py[(i + 1) % n]
        if abs(by - ay) > eps:
            lo = <int>ceil(min(ay, by) - eps)
            hi = <int>floor(max(ay, by) + eps)
            if lo < 0:
                lo = 0
            if hi > height - 1:
                hi = height - 1
            for y in range(lo, hi + 1):
                xc = ax + (y - ay) * (bx - ax) / (by - ay)
                xi = <int>c_round(xc)
                if abs(xc - xi) <= eps and 0 <= xi < width:
                    out[y, xi] = 1
        else:
            y = <int>c_round(ay)
            if abs(ay - y) <= eps and 0 <= y < height:
                lo = <int>ceil(min(ax, bx) - eps)
                hi = <int>floor(max(ax, bx) + eps)
                if lo < 0:
                    lo = 0
                if hi > width - 1:
                    hi = width - 1
                for xi in range(lo, hi + 1):
                    out[y, xi] = 1
    return out_arr
