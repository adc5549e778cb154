"""Exception types raised across the lvef package."""


class LvefError(Exception):
    """Base class for all lvef errors."""


# --- geometry ---

class EmptyMask(LvefError):
    """Mask contains no foreground pixel."""


class DegenerateRegion(LvefError):
    """Largest foreground component is too small to trace a contour."""


class DegenerateInput(LvefError):
    """Point set or polygon is collinear / non-convex where convexity is required."""


# --- landmark / measurement ---

class AmbiguousLandmarks(LvefError):
    """Apex vs annulus selection margin is too small and the choice matters."""

    def __init__(self, message, margin=None, length_change=None):
        super().__init__(message)
        self.margin = margin
        self.length_change = length_change


class NoMidlineIntersection(LvefError):
    """Ray from the apex through the base midpoint misses the contour."""


# --- beat analysis ---

class InvalidWindow(LvefError):
    """Median-filter window is even or non-positive."""


class NoCycles(LvefError):
    """Fewer than two troughs, or no peak contained between troughs."""


# --- TPS / augmentation ---

class SingularSystem(LvefError):
    """TPS control points are collinear or duplicated."""


class DegenerateWarp(LvefError):
    """Augmentation repeatedly produced a self-intersecting or off-frame contour."""


# --- metrics ---

class DimensionMismatch(LvefError):
    """Masks being compared have different shapes."""


class LengthMismatch(LvefError):
    """Paired sequences have different lengths."""


class EmptyInput(LvefError):
    """Metric requested on zero-length input."""


class OutOfRange(LvefError):
    """EF value outside [0, 1]."""


# --- synthetic oracle ---

class ConfigError(LvefError):
    """Synthetic-video configuration is inconsistent (shape exceeds frame, ...)."""


# --- mask-stack file format ---

class StackFormatError(LvefError):
    """Base class for mask-stack parsing errors; carries a byte offset."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (at byte offset {offset})")
        self.offset = offset


class BadMagic(StackFormatError):
    pass


class CorruptHeader(StackFormatError):
    pass


class TruncatedPayload(StackFormatError):
    def __init__(self, message, offset, expected, actual):
        super().__init__(f"{message}: expected {expected} bytes, got {actual}", offset)
        self.expected = expected
        self.actual = actual


class InvalidPixelValue(StackFormatError):
    pass


class MalformedGroup(LvefError):
    """Tracing group has fewer than 3 segments or cannot be ordered."""
