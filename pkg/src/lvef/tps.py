"""Thin-plate spline warps between 2-D control point sets.

Kernel convention: U(r) = r^2 * log(r), with U(0) = 0. Zero
regularization, so a successful fit interpolates every control pair
exactly and the kernel weights satisfy the usual side conditions
(zero sum and zero first moments).
"""

from dataclasses import dataclass

import numpy as np

from .errors import SingularSystem

__all__ = ["TpsWarp", "tps_kernel", "fit_tps", "apply_tps"]


def tps_kernel(r):
    """Radial basis U(r) = r^2 log r, elementwise, with U(0) = 0."""
    r = np.asarray(r, dtype=np.float64)
    out = np.zeros_like(r)
    nz = r > 0
    out[nz] = r[nz] * r[nz] * np.log(r[nz])
    return out


@dataclass(frozen=True)
class TpsWarp:
    """Fitted warp: kernel weights per control point plus an affine part.

    ``affine`` rows are the constant, x, and y coefficients; columns are
    the output x and y components.
    """
    control_source: np.ndarray  # (k, 2)
    control_target: np.ndarray  # (k, 2)
    weights: np.ndarray         # (k, 2)
    affine: np.ndarray          # (3, 2)


def fit_tps(source, target):
    """Fit an exact thin-plate spline interpolant through control pairs.

    Solves the standard augmented linear system
    ``[[K, P], [P.T, 0]] @ [w, a] = [target, 0]`` where
    ``K[i, j] = U(|s_i - s_j|)`` and ``P = [1, x, y]``.

    Raises ``SingularSystem`` for duplicated or collinear source points.
    """
    src = np.asarray(source, dtype=np.float64)
    tgt = np.asarray(target, dtype=np.float64)
    if src.ndim != 2 or src.shape[1] != 2 or src.shape[0] < 3:
        raise ValueError("need at least 3 source points of shape (k, 2)")
    if src.shape != tgt.shape:
        raise ValueError("source and target must have the same shape")
    k = src.shape[0]

    d = np.hypot(src[:, None, 0] - src[None, :, 0],
                 src[:, None, 1] - src[None, :, 1])
    scale = d.max()
    if scale == 0.0 or (d + np.eye(k) * scale < 1e-12 * scale).any():
        raise SingularSystem("duplicate source points")
    kernel = tps_kernel(d)
    p = np.column_stack([np.ones(k), src])
    if np.linalg.matrix_rank(p, tol=1e-9 * max(1.0, scale)) < 3:
        raise SingularSystem("collinear source points")

    system = np.zeros((k + 3, k + 3))
    system[:k, :k] = kernel
    system[:k, k:] = p
    system[k:, :k] = p.T
    rhs = np.zeros((k + 3, 2))
    rhs[:k] = tgt
    try:
        solution = np.linalg.solve(system, rhs)
    except np.linalg.LinAlgError as exc:
        raise SingularSystem(f"TPS system is singular: {exc}") from exc
    warp = TpsWarp(control_source=src.copy(), control_target=tgt.copy(),
                   weights=solution[:k], affine=solution[k:])
    # exact-interpolation sanity check; failure indicates near-singularity
    mapped = apply_tps(warp, src)
    if not np.allclose(mapped, tgt, atol=1e-6 * max(1.0, scale)):
        raise SingularSystem("TPS solve failed to interpolate control points")
    return warp


def apply_tps(warp, points):
    """Evaluate the warp at the given points (order preserved)."""
    pts = np.atleast_2d(np.asarray(points, dtype=np.float64))
    d = np.hypot(pts[:, None, 0] - warp.control_source[None, :, 0],
                 pts[:, None, 1] - warp.control_source[None, :, 1])
    u = tps_kernel(d)
    p = np.column_stack([np.ones(pts.shape[0]), pts])
    return p @ warp.affine + u @ warp.weights
