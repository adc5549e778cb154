"""Synthetic beating-LV mask videos with analytically known volumes.

Each frame is a rasterized semi-ellipse: flat horizontal base (the
mitral plane) with a rounded dome (the apex) above it, so the landmark
logic is exercised as intended. The axes pulse with a raised-cosine
volume waveform between diastolic and systolic sizes.

For the continuous shape, area A = pi*a*b/2 and length L = a, so the
area-length volume is 8A^2/(3*pi*L) = (2*pi/3) * a * b^2. A uniform
axis scale s therefore scales the volume by s^3, and a target ejection
fraction EF fixes the systolic scale at s = (1 - EF)^(1/3).
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError

__all__ = ["SynthConfig", "semi_ellipse_mask", "generate_video",
           "analytic_volume", "beat_boundaries"]


@dataclass(frozen=True)
class SynthConfig:
    frame_width: int = 64
    frame_height: int = 64
    fps: float = 50.0
    n_beats: int = 5
    frames_per_beat: int = 40
    base_semi_axis_a: float = 26.0  # apex direction (dome height), pixels
    base_semi_axis_b: float = 15.0  # basal half-width, pixels
    target_ef: float = 0.6
    noise_px: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if not 0.0 < self.target_ef < 1.0:
            raise ConfigError("target_ef must be in (0, 1)")
        if self.n_beats < 1 or self.frames_per_beat < 10:
            raise ConfigError("need n_beats >= 1 and frames_per_beat >= 10")
        if self.noise_px < 0:
            raise ConfigError("noise_px must be >= 0")
        cx, cy = self.center
        margin = 1.0 + self.noise_px
        if cx - self.base_semi_axis_b < margin \
                or cx + self.base_semi_axis_b > self.frame_width - 1 - margin \
                or cy - self.base_semi_axis_a < margin \
                or cy > self.frame_height - 2:
            raise ConfigError("semi-ellipse does not fit inside the frame")

    @property
    def center(self):
        """Base-line center: dome occupies rows [cy - a, cy]."""
        cx = 0.5 * (self.frame_width - 1)
        cy = 0.5 * (self.frame_height - 1 + self.base_semi_axis_a)
        return cx, cy


def analytic_volume(a, b):
    """Area-length volume of the continuous semi-ellipse (pixels^3)."""
    return (2.0 * math.pi / 3.0) * a * b * b


def semi_ellipse_mask(width, height, cx, cy, a, b, noise_px=0.0, rng=None):
    """Rasterize a flat-based semi-ellipse; optional smooth boundary jitter.

    The dome boundary is perturbed radially by a low-order random
    Fourier series of amplitude ``noise_px``; the base stays flat.
    """
    ys, xs = np.mgrid[0:height, 0:width]
    nx = (xs - cx) / b
    ny = (ys - cy) / a
    rho = np.hypot(nx, ny)
    if noise_px > 0.0 and rng is not None:
        theta = np.arctan2(ny, nx)
        coef = rng.uniform(-1.0, 1.0, size=6)
        jitter = np.zeros_like(theta)
        for k in range(3):
            jitter += coef[2 * k] * np.cos((k + 1) * theta) \
                + coef[2 * k + 1] * np.sin((k + 1) * theta)
        peak = float(np.abs(jitter).max())
        if peak > 0.0:
            jitter *= noise_px / peak  # true peak amplitude = noise_px
        boundary = 1.0 + jitter / min(a, b)
    else:
        boundary = 1.0
    inside = (rho <= boundary) & (ys <= cy)
    return inside.astype(np.uint8)


def beat_boundaries(config):
    """Trough frame indices (cycle boundaries) of the generated video.

    The waveform starts at end-diastole, so troughs sit half a beat in;
    that keeps every cycle boundary away from the signal endpoints,
    where extremum detection is blind.
    """
    n_frames = config.n_beats * config.frames_per_beat
    half = config.frames_per_beat // 2
    return [half + k * config.frames_per_beat
            for k in range(config.n_beats)
            if half + k * config.frames_per_beat < n_frames]


def generate_video(config):
    """Generate the mask video plus analytic ground truth.

    Returns
    -------
    masks : list of (H, W) uint8 arrays
    truth_volumes : list of float, analytic per-frame volumes
    truth_ef : float, equals ``config.target_ef`` by construction
    """
    cx, cy = config.center
    a0, b0 = config.base_semi_axis_a, config.base_semi_axis_b
    v_ed = analytic_volume(a0, b0)
    v_es = v_ed * (1.0 - config.target_ef)
    rng = np.random.default_rng(config.seed)

    n_frames = config.n_beats * config.frames_per_beat
    masks = []
    volumes = []
    for i in range(n_frames):
        phase = 2.0 * math.pi * (i % config.frames_per_beat) \
            / config.frames_per_beat
        vol = v_es + (v_ed - v_es) * 0.5 * (1.0 + math.cos(phase))
        s = (vol / v_ed) ** (1.0 / 3.0)
        masks.append(semi_ellipse_mask(
            config.frame_width, config.frame_height, cx, cy,
            s * a0, s * b0, config.noise_px, rng))
        volumes.append(vol)
    return masks, volumes, config.target_ef
