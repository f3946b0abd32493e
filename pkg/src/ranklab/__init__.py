"""ranklab: exact-arithmetic toolkit for secant-variety dimensions, maximum
X-rank bounds, defectivity censuses, and constructive rank-bound witnesses."""

__version__ = "0.1.0"
