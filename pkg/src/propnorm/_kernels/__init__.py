"""Hot kernels: batched comparison-index evaluation.

Two interchangeable backends implement the same integer-coded kernel
API: a Cython extension (built at install time) and a vectorized numpy
fallback.  The compiled backend is preferred when importable; setting
the environment variable PROPNORM_PURE_PYTHON=1 forces the fallback.
``BACKEND`` records which one is active.

Undefined values (interiority or coincidence involving a
zero-magnitude vector) come back as NaN; callers decide whether that
is an error (networks) or a diagnostic (receptive-field grids).
"""

from __future__ import annotations

import os

import numpy as np

from ..errors import ValidationError
from . import _py

if os.environ.get("PROPNORM_PURE_PYTHON", "") not in ("", "0"):
    _impl = _py
    BACKEND = "numpy"
else:
    try:
        from . import _cy as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _py
        BACKEND = "numpy"

KIND_CODES = {
    "jaccard": _py.JACCARD,
    "interiority": _py.INTERIORITY,
    "coincidence": _py.COINCIDENCE,
    "mjaccard": _py.MJACCARD,
    "euclidean": _py.EUCLIDEAN,
}


def _check(name: str, d: float, e: float) -> int:
    if name not in KIND_CODES:
        raise ValidationError(f"unknown index {name!r}; expected one of {sorted(KIND_CODES)}")
    if not (np.isfinite(d) and d > 0.0 and np.isfinite(e) and e > 0.0):
        raise ValidationError(f"exponents must be finite and > 0, got d={d!r}, e={e!r}")
    return KIND_CODES[name]


def pairwise_values(name: str, X: np.ndarray, d: float = 1.0, e: float = 1.0) -> np.ndarray:
    """Index values for all unordered row pairs, condensed (i < j) order."""
    kind = _check(name, d, e)
    X = np.ascontiguousarray(X, dtype=np.float64)
    if X.ndim != 2 or X.shape[0] < 2:
        raise ValidationError("need a 2-dimensional array with at least 2 rows")
    return _impl.pairwise(X, kind, float(d), float(e))


def one_to_many_values(
    name: str, ref: np.ndarray, points: np.ndarray, d: float = 1.0, e: float = 1.0
) -> np.ndarray:
    """Index values between one reference vector and each row of points."""
    kind = _check(name, d, e)
    ref = np.ascontiguousarray(ref, dtype=np.float64)
    points = np.ascontiguousarray(points, dtype=np.float64)
    if ref.ndim != 1 or points.ndim != 2 or points.shape[1] != ref.shape[0]:
        raise ValidationError("reference must be 1-dimensional and match the points' width")
    return _impl.one_to_many(ref, points, kind, float(d), float(e))


def condensed_to_pair(index: int, n: int) -> tuple[int, int]:
    """Map a condensed position back to its (i, j) row pair, i < j."""
    i = 0
    remaining = index
    while remaining >= n - 1 - i:
        remaining -= n - 1 - i
        i += 1
    return i, i + 1 + remaining
