"""Hot per-pixel kernels: component labeling, boundary tracing, rasterization.

A compiled Cython extension (``lvef.kernels._core``) is preferred; a
numpy fallback (``lvef.kernels._fallback``) with identical outputs is
used when the extension is missing or ``LVEF_PURE_PYTHON=1`` is set.
"""

import os

if os.environ.get("LVEF_PURE_PYTHON"):
    from . import _fallback as _impl
    BACKEND = "python"
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
        BACKEND = "compiled"
    except ImportError:
        from . import _fallback as _impl
        BACKEND = "python"

label_largest_component = _impl.label_largest_component
moore_trace = _impl.moore_trace
fill_polygon = _impl.fill_polygon

__all__ = ["BACKEND", "label_largest_component", "moore_trace", "fill_polygon"]
