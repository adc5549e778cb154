"""File formats: LVM1 binary mask stacks, tracing tables, EF CSV files.

LVM1 layout (little-endian):

====== ======= =====================================
offset size    field
====== ======= =====================================
0      4       magic ``LVM1``
4      2       version (u16, currently 1)
6      4       width (u32, pixels)
10     4       height (u32)
14     4       n_frames (u32)
18     4       fps (IEEE-754 f32)
22     W*H*N   pixels, one byte each in {0, 1},
               frame-major then row-major
====== ======= =====================================
"""

import csv
import struct

import numpy as np

from .errors import (BadMagic, CorruptHeader, InvalidPixelValue,
                     MalformedGroup, TruncatedPayload)
from .maskops import as_mask, rasterize_polygon

__all__ = ["MAGIC", "VERSION", "HEADER_SIZE", "write_mask_stack",
           "read_mask_stack", "read_tracings", "tracings_to_masks",
           "read_ef_csv", "write_ef_csv"]

MAGIC = b"LVM1"
VERSION = 1
_HEADER_FMT = "<4sHIIIf"
HEADER_SIZE = struct.calcsize(_HEADER_FMT)  # 22 bytes


def write_mask_stack(path, masks, fps=0.0):
    """Write a list of equal-size binary masks as an LVM1 file."""
    masks = [as_mask(m) for m in masks]
    if not masks:
        raise ValueError("mask stack must contain at least one frame")
    h, w = masks[0].shape
    if any(m.shape != (h, w) for m in masks):
        raise ValueError("all frames must share the same dimensions")
    with open(path, "wb") as fh:
        fh.write(struct.pack(_HEADER_FMT, MAGIC, VERSION, w, h,
                             len(masks), float(fps)))
        for m in masks:
            fh.write(m.tobytes())


def read_mask_stack(path):
    """Read an LVM1 file; bit-exact inverse of :func:`write_mask_stack`.

    Returns ``(masks, fps)``. Raises ``BadMagic``, ``CorruptHeader``,
    ``TruncatedPayload`` or ``InvalidPixelValue``, each naming the byte
    offset of the problem.
    """
    with open(path, "rb") as fh:
        data = fh.read()
    if len(data) < 4 or data[:4] != MAGIC:
        raise BadMagic(f"expected magic {MAGIC!r}, got {data[:4]!r}", 0)
    if len(data) < HEADER_SIZE:
        raise CorruptHeader("file ends inside the header", len(data))
    _, version, width, height, n_frames, fps = struct.unpack(
        _HEADER_FMT, data[:HEADER_SIZE])
    if version != VERSION:
        raise CorruptHeader(f"unsupported version {version}", 4)
    if width == 0 or height == 0 or n_frames == 0:
        raise CorruptHeader("zero width, height or frame count", 6)
    expected = width * height * n_frames
    actual = len(data) - HEADER_SIZE
    if actual != expected:
        raise TruncatedPayload("payload size mismatch", HEADER_SIZE,
                               expected, actual)
    payload = np.frombuffer(data, dtype=np.uint8, offset=HEADER_SIZE)
    bad = np.flatnonzero(payload > 1)
    if bad.size:
        raise InvalidPixelValue(
            f"pixel byte {payload[bad[0]]} not in {{0, 1}}",
            HEADER_SIZE + int(bad[0]))
    frames = payload.reshape(n_frames, height, width)
    # copy so each frame owns writable, contiguous memory
    return [np.array(f, dtype=np.uint8) for f in frames], float(fps)


def read_tracings(path):
    """Load a tracing CSV into ordered groups.

    Expected columns: ``video_id,frame,x1,y1,x2,y2`` with a header row.
    Returns a dict mapping (video_id, frame) to a list of segment
    tuples in file order.
    """
    groups = {}
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            key = (row["video_id"], int(row["frame"]))
            seg = (float(row["x1"]), float(row["y1"]),
                   float(row["x2"]), float(row["y2"]))
            groups.setdefault(key, []).append(seg)
    return groups


def _group_polygon(segments):
    """Closed polygon from paired-coordinate tracing segments.

    The first segment is basal and later ones step toward the apex;
    the (x1, y1) endpoints run down one lateral wall, the (x2, y2)
    endpoints come back up the other.
    """
    if len(segments) < 3:
        raise MalformedGroup(
            f"tracing group has {len(segments)} segment(s), need >= 3")
    seg = np.asarray(segments, dtype=np.float64)
    mids = 0.5 * (seg[:, :2] + seg[:, 2:])
    axis = mids[-1] - mids[0]
    if np.hypot(*axis) == 0.0:
        raise MalformedGroup("tracing group has no basal-to-apical extent")
    proj = (mids - mids[0]) @ axis
    if np.any(np.diff(proj) <= 0):
        raise MalformedGroup("tracing segments are not ordered apex-ward")
    left = seg[:, :2]
    right = seg[:, 2:][::-1]
    return np.vstack([left, right])


def tracings_to_masks(table, width, height):
    """Rasterize each tracing group into a binary mask.

    ``table`` is the dict produced by :func:`read_tracings`. Returns a
    dict with the same keys and ``(height, width)`` masks as values.
    """
    return {key: rasterize_polygon(_group_polygon(segs), width, height)
            for key, segs in table.items()}


def read_ef_csv(path):
    """Read an EF CSV (columns ``video_id,ef_pred[,ef_true]``).

    EF values are fractions in [0, 1]. Returns
    ``(video_ids, ef_pred, ef_true_or_None)``.
    """
    ids, pred, true = [], [], []
    has_true = None
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            ids.append(row["video_id"])
            pred.append(float(row["ef_pred"]))
            if has_true is None:
                has_true = "ef_true" in row and row["ef_true"] not in (None, "")
            if has_true:
                true.append(float(row["ef_true"]))
    return ids, pred, (true if has_true else None)


def write_ef_csv(path, video_ids, ef_pred, ef_true=None):
    """Write an EF CSV; fractions are formatted with 6 decimal places."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        if ef_true is None:
            writer.writerow(["video_id", "ef_pred"])
            for vid, p in zip(video_ids, ef_pred):
                writer.writerow([vid, f"{p:.6f}"])
        else:
            writer.writerow(["video_id", "ef_pred", "ef_true"])
            for vid, p, t in zip(video_ids, ef_pred, ef_true):
                writer.writerow([vid, f"{p:.6f}", f"{t:.6f}"])
