"""Integer-sided triangles with integral medians."""

from .core import (
    MAX_SIDE,
    ArithmeticRangeError,
    DegenerateTriangleError,
    MedianAnalysis,
    MedianStatus,
    Triangle,
    TwoAdic,
    analyze_medians,
    canonicalize,
    integral_median_count,
    is_perfect_square,
    isqrt,
    median_quad_squares,
    two_adic,
)

__version__ = "0.1.0"
