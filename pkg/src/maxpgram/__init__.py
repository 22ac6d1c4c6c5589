"""maxpgram: locally-maximal-area parallelograms in convex polygons."""

from .kernels import DOUBLE, KERNELS, RATIONAL
from .polygon import ConvexPolygon, validate_polygon

__all__ = ["ConvexPolygon", "validate_polygon", "RATIONAL", "DOUBLE", "KERNELS"]
__version__ = "0.1.0"
