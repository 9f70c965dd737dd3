"""Feature transformations and density-level checks.

Three transform kinds are supported:

* ``proportional``: x -> c**x with base c > 1.  Satisfies
  f(x + a) = f(a) * f(x), i.e. translations of the argument become
  scalings of the value.
* ``signed_proportional``: x -> c**x for x >= 0 and -c**|x| for x < 0.
  Sign-preserving variant used to build two-sided right-skewed features.
  It is discontinuous at 0 (limits -1 and +1); 0 maps to +1 by the
  x >= 0 branch.
* ``power``: x -> x**q with integer q >= 1.

The density rule: samples of y = f(x) with x distributed as p_x have
density p_y(f(x)) = p_x(x) / f'(x) wherever f is strictly monotone.
For the proportional kind on a uniform base density this yields
p_y(y) = k / y, a straight line of slope -1 on log-log axes, which
``loglog_slope`` verifies empirically.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import DegenerateFitError, RangeOverflowError, SingularityError, ValidationError

KINDS = ("proportional", "signed_proportional", "power")

#: sample counts below this give slope estimates with wide confidence
SLOPE_SAMPLE_GUIDANCE = 10_000


@dataclass(frozen=True)
class TransformSpec:
    """One of the supported transform kinds with its parameter.

    ``c`` applies to the proportional kinds (must be > 1); ``q`` applies
    to the power kind (integer >= 1).
    """

    kind: str
    c: float | None = None
    q: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValidationError(f"unknown transform kind {self.kind!r}; expected one of {KINDS}")
        if self.kind in ("proportional", "signed_proportional"):
            if self.c is None or not math.isfinite(self.c) or self.c <= 1.0:
                raise ValidationError(f"{self.kind} transform requires base c > 1, got {self.c!r}")
        else:
            if self.q is None or int(self.q) != self.q or self.q < 1:
                raise ValidationError(f"power transform requires integer q >= 1, got {self.q!r}")
            object.__setattr__(self, "q", int(self.q))


def apply_transform(spec: TransformSpec, x: float) -> float:
    """Evaluate the transform at a single point.

    Raises RangeOverflowError when the result exceeds the float range;
    results are never silently saturated.
    """
    if not math.isfinite(x):
        raise ValidationError(f"input must be finite, got {x!r}")
    try:
        if spec.kind == "proportional":
            return math.pow(spec.c, x)
        if spec.kind == "signed_proportional":
            magnitude = math.pow(spec.c, abs(x))
            return magnitude if x >= 0 else -magnitude
        return math.pow(x, spec.q)
    except OverflowError:
        raise RangeOverflowError(f"transform overflows float range at x={x!r}") from None


def apply_transform_array(spec: TransformSpec, values: np.ndarray) -> np.ndarray:
    """Vectorized apply_transform with the same overflow policy."""
    x = np.asarray(values, dtype=np.float64)
    if not np.all(np.isfinite(x)):
        raise ValidationError("inputs must be finite")
    with np.errstate(over="ignore"):
        if spec.kind == "proportional":
            out = np.power(spec.c, x)
        elif spec.kind == "signed_proportional":
            out = np.sign(x) * np.power(spec.c, np.abs(x))
            out = np.where(x == 0.0, 1.0, out)
        else:
            out = np.power(x, spec.q)
    if not np.all(np.isfinite(out)):
        bad = float(np.asarray(x).ravel()[int(np.argwhere(~np.isfinite(out.ravel()))[0][0])])
        raise RangeOverflowError(f"transform overflows float range at x={bad!r}")
    return out


def derivative(spec: TransformSpec, x: float) -> float:
    """First derivative of the transform at x.

    The signed_proportional branch uses ln(c) * c**|x|, valid on both
    sides of the jump at 0.
    """
    if spec.kind == "proportional":
        return math.log(spec.c) * math.pow(spec.c, x)
    if spec.kind == "signed_proportional":
        return math.log(spec.c) * math.pow(spec.c, abs(x))
    return float(spec.q) * math.pow(x, spec.q - 1)


def transformed_density(
    spec: TransformSpec, p_x: Callable[[float], float], x: float
) -> float:
    """Density of the transformed feature at f(x): p_x(x) / f'(x).

    A zero numerator short-circuits to 0; otherwise a vanishing
    derivative raises SingularityError.
    """
    value = float(p_x(x))
    if not math.isfinite(value):
        raise ValidationError(f"density value at x={x!r} is not finite")
    if value == 0.0:
        return 0.0
    deriv = derivative(spec, x)
    if deriv == 0.0:
        raise SingularityError(f"transform derivative vanishes at x={x!r}")
    return value / deriv


def loglog_histogram(
    samples: Sequence[float] | np.ndarray, bins: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Histogram over log-spaced bins.

    Returns (geometric bin centers, density estimates, raw counts).
    Density is count / (n * bin width), so it integrates to 1.
    """
    y = np.asarray(samples, dtype=np.float64)
    if y.size == 0:
        raise ValidationError("no samples")
    if not np.all(np.isfinite(y)) or np.any(y <= 0.0):
        raise ValidationError("samples must be finite and strictly positive")
    if bins < 2:
        raise ValidationError(f"need at least 2 bins, got {bins}")

    lo, hi = float(np.min(y)), float(np.max(y))
    if lo == hi:
        raise DegenerateFitError("all samples equal: single occupied bin")
    edges = np.logspace(math.log10(lo), math.log10(hi), bins + 1)
    edges[0], edges[-1] = lo, hi  # guard against rounding excluding extremes
    counts, _ = np.histogram(y, bins=edges)
    density = counts / (y.size * np.diff(edges))
    centers = np.sqrt(edges[:-1] * edges[1:])
    return centers, density, counts


def loglog_slope(samples: Sequence[float] | np.ndarray, bins: int) -> float:
    """Least-squares slope of log(density) against log(value).

    Only bins with nonzero counts enter the regression; fewer than two
    of them raise DegenerateFitError.  Counts below
    SLOPE_SAMPLE_GUIDANCE give a wide-confidence estimate and trigger a
    warning.
    """
    centers, density, counts = loglog_histogram(samples, bins)
    if np.asarray(samples).size < SLOPE_SAMPLE_GUIDANCE:
        warnings.warn(
            f"slope fitted from {np.asarray(samples).size} samples; "
            f"estimates below {SLOPE_SAMPLE_GUIDANCE} samples have wide confidence",
            stacklevel=2,
        )
    occupied = counts > 0
    if int(occupied.sum()) < 2:
        raise DegenerateFitError(f"only {int(occupied.sum())} occupied bins; need at least 2")
    slope, _ = np.polyfit(np.log(centers[occupied]), np.log(density[occupied]), 1)
    return float(slope)
