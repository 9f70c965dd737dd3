"""Vectorized numpy backend for the pairwise/grid kernels.

Semantics are identical to the compiled backend: condensed pairwise
output in lexicographic (i < j) order, NaN marking undefined values
(interiority or coincidence against a zero-magnitude vector).
"""

from __future__ import annotations

import numpy as np

JACCARD, INTERIORITY, COINCIDENCE, MJACCARD, EUCLIDEAN = range(5)


def _values_block(pos_a, neg_a, pos_block, neg_block, kind: int, d: float, e: float):
    """Index values of one np-set row against a block of rows."""
    if kind == MJACCARD:
        num = np.minimum(pos_a, pos_block) + np.minimum(neg_a, neg_block)
        den = np.maximum(pos_a, pos_block) + np.maximum(neg_a, neg_block)
        terms = np.divide(num, den, out=np.ones_like(num), where=den != 0.0)
        return terms.mean(axis=1) ** d

    num = (np.minimum(pos_a, pos_block) + np.minimum(neg_a, neg_block)).sum(axis=1)
    den = (np.maximum(pos_a, pos_block) + np.maximum(neg_a, neg_block)).sum(axis=1)
    if kind == JACCARD:
        return np.divide(num, den, out=np.ones_like(num), where=den != 0.0)

    total_a = pos_a.sum() + neg_a.sum()
    total_block = pos_block.sum(axis=1) + neg_block.sum(axis=1)
    defined = (total_a != 0.0) & (total_block != 0.0)
    interiority = np.divide(
        num,
        np.minimum(total_a, total_block),
        out=np.full(num.shape, np.nan),
        where=defined,
    )
    if kind == INTERIORITY:
        return interiority
    jaccard = np.divide(num, den, out=np.ones_like(num), where=den != 0.0)
    return jaccard**d * interiority**e


def pairwise(X: np.ndarray, kind: int, d: float, e: float) -> np.ndarray:
    n = X.shape[0]
    out = np.empty(n * (n - 1) // 2, dtype=np.float64)
    cursor = 0
    if kind == EUCLIDEAN:
        for i in range(n - 1):
            delta = X[i + 1 :] - X[i]
            out[cursor : cursor + n - 1 - i] = np.sqrt(np.einsum("ij,ij->i", delta, delta))
            cursor += n - 1 - i
        return out
    pos, neg = np.maximum(X, 0.0), np.maximum(-X, 0.0)
    for i in range(n - 1):
        out[cursor : cursor + n - 1 - i] = _values_block(
            pos[i], neg[i], pos[i + 1 :], neg[i + 1 :], kind, d, e
        )
        cursor += n - 1 - i
    return out


def one_to_many(ref: np.ndarray, points: np.ndarray, kind: int, d: float, e: float) -> np.ndarray:
    if kind == EUCLIDEAN:
        delta = points - ref
        return np.sqrt(np.einsum("ij,ij->i", delta, delta))
    return _values_block(
        np.maximum(ref, 0.0),
        np.maximum(-ref, 0.0),
        np.maximum(points, 0.0),
        np.maximum(-points, 0.0),
        kind,
        d,
        e,
    )
