"""Compare the compiled kernels against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--repeats 5]
"""

import argparse
import time

import numpy as np

from lvef.kernels import _fallback

try:
    from lvef.kernels import _core
except ImportError:
    _core = None


def _time(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def make_inputs(size, rng):
    mask = (rng.random((size, size)) < 0.45).astype(np.uint8)
    yy, xx = np.mgrid[0:size, 0:size]
    blob = ((((xx - size / 2) / (size * 0.35)) ** 2
             + ((yy - size / 2) / (size * 0.25)) ** 2) <= 1.0)
    blob = blob.astype(np.uint8)
    n = 64
    theta = np.linspace(0.0, 2.0 * np.pi, n, endpoint=False)
    r = size * (0.3 + 0.1 * np.cos(5 * theta))
    xs = np.ascontiguousarray(size / 2 + r * np.cos(theta))
    ys = np.ascontiguousarray(size / 2 + r * np.sin(theta))
    return mask, blob, xs, ys


def run(repeats):
    rng = np.random.default_rng(0)
    backends = [("python", _fallback)]
    if _core is not None:
        backends.insert(0, ("compiled", _core))
    else:
        print("compiled extension not available; timing fallback only")

    print(f"{'kernel':<26}{'size':>6}" +
          "".join(f"{name:>12}" for name, _ in backends) + f"{'speedup':>10}")
    for size in (64, 256, 512):
        mask, blob, xs, ys = make_inputs(size, rng)
        rows = [
            ("label_largest_component",
             lambda impl: impl.label_largest_component(mask.copy())),
            ("moore_trace",
             lambda impl: impl.moore_trace(blob.copy())),
            ("fill_polygon",
             lambda impl: impl.fill_polygon(xs, ys, size, size)),
        ]
        for name, call in rows:
            times = [_time(lambda impl=impl: call(impl), repeats)
                     for _, impl in backends]
            speedup = times[-1] / times[0] if len(times) == 2 else float("nan")
            cells = "".join(f"{t * 1e3:>10.2f}ms" for t in times)
            print(f"{name:<26}{size:>6}{cells}{speedup:>9.1f}x")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    run(parser.parse_args().repeats)
