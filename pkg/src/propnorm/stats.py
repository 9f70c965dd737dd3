"""Dataset model and per-feature summary statistics.

A dataset is an N x M table of finite reals (rows are data elements,
columns are features) with unique feature names and optional per-row
category labels.  Column statistics include, beyond the usual
min/max/mean/std, the non-central dispersions of the strictly positive
and strictly negative sample populations, which drive the proportional
normalizations in :mod:`propnorm.normalize`.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence, TextIO

import numpy as np

from .errors import ValidationError

LABEL_COLUMN = "label"


@dataclass(frozen=True)
class ColumnStats:
    """Summary statistics of one feature column.

    ``std`` uses the N-1 divisor and is defined as 0 for a single sample.
    ``xi_p`` / ``xi_n`` are the root mean squares of the strictly positive
    entries and of the magnitudes of the strictly negative entries; zeros
    belong to neither population, and an empty population has dispersion 0.
    """

    min: float
    max: float
    mean: float
    std: float
    xi_p: float
    xi_n: float
    n_p: int
    n_n: int


@dataclass(frozen=True)
class FeatureMatrix:
    """N data elements by M features, with optional category labels."""

    values: np.ndarray
    feature_names: tuple[str, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.float64)
        if values.ndim != 2:
            raise ValidationError(f"values must be 2-dimensional, got ndim={values.ndim}")
        n, m = values.shape
        if n < 1 or m < 1:
            raise ValidationError(f"matrix must be at least 1x1, got {n}x{m}")
        names = tuple(self.feature_names)
        if len(names) != m:
            raise ValidationError(f"expected {m} feature names, got {len(names)}")
        if len(set(names)) != len(names):
            dup = sorted(name for name in set(names) if names.count(name) > 1)
            raise ValidationError(f"duplicate feature names: {dup}")
        if not np.all(np.isfinite(values)):
            bad = np.argwhere(~np.isfinite(values))[0]
            raise ValidationError(
                f"non-finite value at row {bad[0] + 1}, column '{names[bad[1]]}'"
            )
        if self.labels is not None and len(self.labels) != n:
            raise ValidationError(f"expected {n} labels, got {len(self.labels)}")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "feature_names", names)
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def n_rows(self) -> int:
        return self.values.shape[0]

    @property
    def n_features(self) -> int:
        return self.values.shape[1]

    def column(self, name_or_index: str | int) -> np.ndarray:
        if isinstance(name_or_index, str):
            try:
                name_or_index = self.feature_names.index(name_or_index)
            except ValueError:
                raise ValidationError(f"unknown feature {name_or_index!r}") from None
        return self.values[:, name_or_index]

    def with_values(self, values: np.ndarray) -> "FeatureMatrix":
        """Same names and labels over a new table of identical shape."""
        values = np.asarray(values, dtype=np.float64)
        if values.shape != self.values.shape:
            raise ValidationError(
                f"replacement shape {values.shape} != original {self.values.shape}"
            )
        return FeatureMatrix(values, self.feature_names, self.labels)


def column_stats(column: Sequence[float] | np.ndarray) -> ColumnStats:
    """Compute all per-column statistics in a single pass over the data.

    Raises ValidationError for an empty column or any non-finite entry.
    """
    x = np.asarray(column, dtype=np.float64)
    if x.ndim != 1:
        raise ValidationError(f"column must be 1-dimensional, got ndim={x.ndim}")
    if x.size == 0:
        raise ValidationError("column is empty")
    if not np.all(np.isfinite(x)):
        pos = int(np.argwhere(~np.isfinite(x))[0][0])
        raise ValidationError(f"non-finite entry at position {pos}")

    lo, hi = float(np.min(x)), float(np.max(x))
    # summation rounding can push the raw mean an ulp outside [min, max]
    # (e.g. constant columns), which would also leave a spurious nonzero std
    mean = min(max(float(np.mean(x)), lo), hi)
    pos = x[x > 0.0]
    neg = x[x < 0.0]
    stats = ColumnStats(
        min=lo,
        max=hi,
        mean=mean,
        std=_sample_std(x, mean),
        xi_p=_root_mean_square(pos),
        xi_n=_root_mean_square(neg),
        n_p=int(pos.size),
        n_n=int(neg.size),
    )
    for label in ("mean", "std", "xi_p", "xi_n"):
        if not np.isfinite(getattr(stats, label)):
            raise ValidationError(f"{label} overflows the float range")
    return stats


def _root_mean_square(values: np.ndarray) -> float:
    """sqrt(mean(v^2)), rescaled by the peak magnitude so squaring large
    but representable values cannot spuriously overflow."""
    if values.size == 0:
        return 0.0
    peak = float(np.max(np.abs(values)))
    if peak == 0.0:
        return 0.0
    return peak * float(np.sqrt(np.mean(np.square(values / peak))))


def _sample_std(x: np.ndarray, mean: float) -> float:
    """N-1 divisor std with the same overflow-safe rescaling; 0 when N = 1."""
    if x.size == 1:
        return 0.0
    deviations = x - mean
    peak = float(np.max(np.abs(deviations)))
    if peak == 0.0:
        return 0.0
    return peak * float(np.sqrt(np.sum(np.square(deviations / peak)) / (x.size - 1)))


def _open_for(source, mode: str):
    if isinstance(source, (str, Path)):
        return open(source, mode, encoding="utf-8", newline=""), True
    return source, False


def load_matrix(source: TextIO | str | Path) -> FeatureMatrix:
    """Parse a comma-separated table with a header row into a FeatureMatrix.

    A column named "label" (any position) carries the category labels; all
    other columns must be numeric.  Errors report 1-based data row numbers
    and the offending column name.
    """
    stream, owned = _open_for(source, "r")
    try:
        reader = csv.reader(stream)
        try:
            header = next(reader)
        except StopIteration:
            raise ValidationError("no header") from None
        header = [h.strip() for h in header]
        if any(not h for h in header):
            raise ValidationError("empty feature name in header")

        label_idx = header.index(LABEL_COLUMN) if LABEL_COLUMN in header else None
        feature_names = [h for h in header if h != LABEL_COLUMN]
        if not feature_names:
            raise ValidationError("no feature columns (only a label column)")
        if len(set(header)) != len(header):
            dup = sorted({h for h in header if header.count(h) > 1})
            raise ValidationError(f"duplicate feature names: {dup}")

        rows: list[list[float]] = []
        labels: list[str] = []
        for row_no, cells in enumerate(reader, start=1):
            if not cells:
                continue
            if len(cells) != len(header):
                raise ValidationError(
                    f"ragged row {row_no}: expected {len(header)} cells, got {len(cells)}"
                )
            values = []
            for idx, cell in enumerate(cells):
                if idx == label_idx:
                    labels.append(cell)
                    continue
                try:
                    values.append(float(cell))
                except ValueError:
                    raise ValidationError(
                        f"non-numeric cell at row {row_no}, column '{header[idx]}'"
                    ) from None
            rows.append(values)

        if not rows:
            raise ValidationError("no data rows")
        return FeatureMatrix(
            np.array(rows, dtype=np.float64),
            tuple(feature_names),
            tuple(labels) if label_idx is not None else None,
        )
    finally:
        if owned:
            stream.close()


def write_matrix(matrix: FeatureMatrix, dest: TextIO | str | Path) -> None:
    """Write the matrix in the same comma-separated format load_matrix reads.

    Floats are serialized with repr, which round-trips exactly.
    """
    stream, owned = _open_for(dest, "w")
    try:
        header = list(matrix.feature_names)
        if matrix.labels is not None:
            header.append(LABEL_COLUMN)
        stream.write(",".join(header) + "\n")
        for i in range(matrix.n_rows):
            cells = [repr(float(v)) for v in matrix.values[i]]
            if matrix.labels is not None:
                cells.append(matrix.labels[i])
            stream.write(",".join(cells) + "\n")
    finally:
        if owned:
            stream.close()
