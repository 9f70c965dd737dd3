"""Per-feature normalization: standardization, SPN, and JPN.

Standardization recenters and rescales, which suits features compared by
translation-invariant operators.  The two proportional normalizations
never translate: they only divide by the non-central dispersions xi of
the strictly positive / strictly negative sample populations, so signs
are preserved, zeros stay zero, and scaling-invariant comparisons keep
their meaning.

* SPN (separated): positives divided by xi_p, negatives by xi_n; each
  nonempty sign population ends up with unit dispersion.
* JPN (joint): everything divided by max(xi_p, xi_n); only the larger
  side reaches unit dispersion.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import ConstantColumnError, PropnormError, ValidationError, ZeroDispersionError
from .stats import FeatureMatrix, column_stats

METHODS = ("standardize", "spn", "jpn")


def _as_column(column: Sequence[float] | np.ndarray) -> np.ndarray:
    x = np.asarray(column, dtype=np.float64)
    if x.ndim != 1 or x.size == 0:
        raise ValidationError("column must be a nonempty 1-dimensional sequence")
    if not np.all(np.isfinite(x)):
        raise ValidationError("column entries must be finite")
    return x


def standardize(column: Sequence[float] | np.ndarray) -> np.ndarray:
    """(x - mean) / std with the N-1 divisor; output has mean 0, std 1."""
    x = _as_column(column)
    stats = column_stats(x)
    if stats.std == 0.0:
        raise ConstantColumnError(
            f"column is constant (std = 0, value {stats.mean!r}); cannot standardize"
        )
    return (x - stats.mean) / stats.std


def spn(column: Sequence[float] | np.ndarray) -> np.ndarray:
    """Separated proportional normalization.

    Strictly positive entries are divided by xi_p and strictly negative
    entries by xi_n; zeros are untouched, as is any empty sign
    population.  Scaling only, no translation.
    """
    x = _as_column(column)
    stats = column_stats(x)
    out = x.copy()
    if stats.n_p > 0:
        out[x > 0.0] /= stats.xi_p
    if stats.n_n > 0:
        out[x < 0.0] /= stats.xi_n
    return out


def jpn(column: Sequence[float] | np.ndarray) -> np.ndarray:
    """Joint proportional normalization: divide by max(xi_p, xi_n)."""
    x = _as_column(column)
    stats = column_stats(x)
    scale = max(stats.xi_p, stats.xi_n)
    if scale == 0.0:
        raise ZeroDispersionError("column is all zeros; joint dispersion undefined")
    return x / scale


_COLUMN_OPS = {"standardize": standardize, "spn": spn, "jpn": jpn}


def normalize_matrix(matrix: FeatureMatrix, method: str) -> FeatureMatrix:
    """Apply one normalization method to every feature column independently.

    Per-column failures are re-raised with the feature name attached.
    Labels pass through unchanged.
    """
    if method not in METHODS:
        raise ValidationError(f"unknown method {method!r}; expected one of {METHODS}")
    op = _COLUMN_OPS[method]
    out = np.empty_like(matrix.values)
    for k, name in enumerate(matrix.feature_names):
        try:
            out[:, k] = op(matrix.values[:, k])
        except PropnormError as exc:
            raise type(exc)(f"feature '{name}': {exc}") from None
    return matrix.with_values(out)
