"""Uniform and proportional comparison operators.

Uniform comparisons (difference, Euclidean distance) are invariant to a
common translation of both arguments.  Proportional comparisons (ratio
and the Jaccard family) are invariant to a common positive scaling.

Signed vectors enter the multiset indices through their np-set
decomposition: per dimension, the positive part max(v, 0) and the
negative-part magnitude |min(v, 0)|.  That turns min/max "intersection
over union" style indices into well-defined operators on mixed-sign
data: entries of opposite sign share nothing, entries of equal sign
overlap by the smaller magnitude.

Degenerate-input conventions: Jaccard-family indices of two all-zero
vectors are 1 (two empty multisets are identical); the interiority index
is an error there because its denominator (the smaller total magnitude)
has no such convention.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DivisionByZeroError, UndefinedInteriorityError, ValidationError

ArrayLike = Sequence[float] | np.ndarray


@dataclass(frozen=True)
class IndexParams:
    """Sharpness exponents of the coincidence index, both > 0."""

    d: float = 1.0
    e: float = 1.0

    def __post_init__(self):
        for label, value in (("d", self.d), ("e", self.e)):
            if not math.isfinite(value) or value <= 0.0:
                raise ValidationError(f"exponent {label} must be finite and > 0, got {value!r}")


@dataclass(frozen=True)
class NpSetVector:
    """Positive-part / negative-part-magnitude decomposition of a vector."""

    pos: np.ndarray
    neg_mag: np.ndarray

    @classmethod
    def from_vector(cls, v: ArrayLike) -> "NpSetVector":
        x = _as_vector(v)
        return cls(pos=np.maximum(x, 0.0), neg_mag=np.maximum(-x, 0.0))

    @property
    def dim(self) -> int:
        return self.pos.shape[0]

    @property
    def total_magnitude(self) -> float:
        return float(np.sum(self.pos) + np.sum(self.neg_mag))

    def to_vector(self) -> np.ndarray:
        """Exact reconstruction of the original vector."""
        return self.pos - self.neg_mag


def _as_vector(v: ArrayLike) -> np.ndarray:
    x = np.asarray(v, dtype=np.float64)
    if x.ndim != 1 or x.size == 0:
        raise ValidationError("expected a nonempty 1-dimensional vector")
    if not np.all(np.isfinite(x)):
        raise ValidationError("vector entries must be finite")
    return x


def _as_pair(x: ArrayLike, y: ArrayLike) -> tuple[np.ndarray, np.ndarray]:
    a, b = _as_vector(x), _as_vector(y)
    if a.shape != b.shape:
        raise ValidationError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    return a, b


def _finite_scalar(value: float, name: str) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ValidationError(f"{name} must be finite, got {value!r}")
    return value


def diff(x: float, y: float) -> float:
    """Signed difference y - x; the elementary uniform comparison."""
    return _finite_scalar(y, "y") - _finite_scalar(x, "x")


def abs_diff(x: float, y: float) -> float:
    """|y - x|; uniform and non-negative."""
    return abs(diff(x, y))


def euclidean(x: ArrayLike, y: ArrayLike) -> float:
    """Euclidean distance between two equal-dimension vectors."""
    a, b = _as_pair(x, y)
    return float(np.sqrt(np.sum(np.square(b - a))))


def ratio(x: float, y: float) -> float:
    """y / x; the elementary proportional comparison.  Requires x != 0."""
    x = _finite_scalar(x, "x")
    y = _finite_scalar(y, "y")
    if x == 0.0:
        raise DivisionByZeroError("ratio undefined for x = 0")
    return y / x


def scalar_jaccard(x: float, y: float) -> float:
    """min/max of two non-negative scalars; 1 when both are 0."""
    x = _finite_scalar(x, "x")
    y = _finite_scalar(y, "y")
    if x < 0.0 or y < 0.0:
        raise ValidationError(f"inputs must be non-negative, got ({x!r}, {y!r})")
    if x == 0.0 and y == 0.0:
        return 1.0
    return min(x, y) / max(x, y)


def nonneg_jaccard(x: ArrayLike, y: ArrayLike) -> float:
    """Sum of per-dimension minima over sum of maxima, non-negative entries."""
    a, b = _as_pair(x, y)
    if np.any(a < 0.0) or np.any(b < 0.0):
        raise ValidationError("entries must be non-negative")
    denominator = float(np.sum(np.maximum(a, b)))
    if denominator == 0.0:
        return 1.0
    return float(np.sum(np.minimum(a, b))) / denominator


def np_jaccard(x: ArrayLike, y: ArrayLike) -> float:
    """Jaccard index of two signed vectors via their np-set decomposition."""
    a, b = _as_pair(x, y)
    pos_a, neg_a = np.maximum(a, 0.0), np.maximum(-a, 0.0)
    pos_b, neg_b = np.maximum(b, 0.0), np.maximum(-b, 0.0)
    denominator = float(np.sum(np.maximum(pos_a, pos_b)) + np.sum(np.maximum(neg_a, neg_b)))
    if denominator == 0.0:
        return 1.0
    numerator = float(np.sum(np.minimum(pos_a, pos_b)) + np.sum(np.minimum(neg_a, neg_b)))
    return numerator / denominator


def np_interiority(x: ArrayLike, y: ArrayLike) -> float:
    """Shared np-set mass over the smaller total magnitude.

    Quantifies how much the smaller vector sits inside the larger one;
    undefined (error) when either vector has zero total magnitude.
    """
    a, b = _as_pair(x, y)
    pos_a, neg_a = np.maximum(a, 0.0), np.maximum(-a, 0.0)
    pos_b, neg_b = np.maximum(b, 0.0), np.maximum(-b, 0.0)
    total_a = float(np.sum(pos_a) + np.sum(neg_a))
    total_b = float(np.sum(pos_b) + np.sum(neg_b))
    if total_a == 0.0 or total_b == 0.0:
        raise UndefinedInteriorityError("interiority undefined for a zero-magnitude vector")
    numerator = float(np.sum(np.minimum(pos_a, pos_b)) + np.sum(np.minimum(neg_a, neg_b)))
    return numerator / min(total_a, total_b)


def coincidence(x: ArrayLike, y: ArrayLike, params: IndexParams = IndexParams()) -> float:
    """Jaccard**d * interiority**e, a sharpened product of the two indices."""
    return np_jaccard(x, y) ** params.d * np_interiority(x, y) ** params.e


def modified_jaccard(x: ArrayLike, y: ArrayLike, d: float = 1.0) -> float:
    """Per-feature min/max ratios averaged jointly, then raised to d.

    Each feature contributes (min pos + min neg-mag) / (max pos + max
    neg-mag); a 0/0 term counts as 1 (two zeros are identical).  The
    exponent applies to the mean, as a comparison transformation of the
    whole index.  Unlike np_jaccard, the per-feature quotients never mix
    magnitudes across features, which is what makes this index invariant
    to any per-feature (even sign-separated) rescaling.
    """
    if not math.isfinite(d) or d <= 0.0:
        raise ValidationError(f"exponent d must be finite and > 0, got {d!r}")
    a, b = _as_pair(x, y)
    pos_a, neg_a = np.maximum(a, 0.0), np.maximum(-a, 0.0)
    pos_b, neg_b = np.maximum(b, 0.0), np.maximum(-b, 0.0)
    numerators = np.minimum(pos_a, pos_b) + np.minimum(neg_a, neg_b)
    denominators = np.maximum(pos_a, pos_b) + np.maximum(neg_a, neg_b)
    zero_over_zero = denominators == 0.0
    terms = np.divide(numerators, denominators, out=np.ones_like(numerators), where=~zero_over_zero)
    return float(np.mean(terms)) ** d


def power_compare(value: float, d: float) -> float:
    """value**d for value in [0, 1]; order-preserving sharpening."""
    value = _finite_scalar(value, "value")
    if not 0.0 <= value <= 1.0:
        raise ValidationError(f"value must lie in [0, 1], got {value!r}")
    if not math.isfinite(d) or d <= 0.0:
        raise ValidationError(f"exponent d must be finite and > 0, got {d!r}")
    return value**d
