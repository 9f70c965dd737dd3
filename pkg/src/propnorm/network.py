"""Similarity networks, receptive-field grids, layouts, and diagnostics.

A similarity network is the complete weighted graph over the rows of a
feature matrix, with pairwise index values as edge weights.  All three
network indices produce weights in [0, 1]; Euclidean distances are
turned into similarities by complementing against the largest observed
distance.  A receptive field is the region of a 2D feature plane whose
similarity to a fixed reference vector reaches a threshold.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx
import numpy as np

from ._kernels import condensed_to_pair, one_to_many_values, pairwise_values
from .errors import (
    DegenerateGraphError,
    LabelsRequiredError,
    UndefinedInteriorityError,
    ValidationError,
)
from .similarity import IndexParams
from .stats import FeatureMatrix

NETWORK_INDICES = ("coincidence", "mjaccard", "euclidean_complement")
FIELD_INDICES = ("jaccard", "interiority", "coincidence", "mjaccard")


@dataclass(frozen=True)
class IndexDescriptor:
    """Which comparison index produced a set of weights, and with what exponents."""

    name: str
    params: IndexParams = IndexParams()

    def __post_init__(self):
        known = set(NETWORK_INDICES) | set(FIELD_INDICES)
        if self.name not in known:
            raise ValidationError(f"unknown index {self.name!r}; expected one of {sorted(known)}")

    def as_dict(self) -> dict:
        return {"index": self.name, "d": self.params.d, "e": self.params.e}


@dataclass(frozen=True)
class WeightedGraph:
    """Symmetric weighted graph: edges (i, j, w) with i < j, weights in [0, 1]."""

    n_nodes: int
    edges: tuple[tuple[int, int, float], ...]
    node_labels: tuple[str, ...] | None
    index_descriptor: IndexDescriptor

    def __post_init__(self):
        if self.n_nodes < 1:
            raise ValidationError("graph needs at least one node")
        if self.node_labels is not None and len(self.node_labels) != self.n_nodes:
            raise ValidationError(
                f"expected {self.n_nodes} labels, got {len(self.node_labels)}"
            )
        seen = set()
        for i, j, w in self.edges:
            if not 0 <= i < j < self.n_nodes:
                raise ValidationError(f"bad edge ({i}, {j}): need 0 <= i < j < {self.n_nodes}")
            if (i, j) in seen:
                raise ValidationError(f"duplicate edge ({i}, {j})")
            seen.add((i, j))
            if not 0.0 <= w <= 1.0:
                raise ValidationError(f"edge ({i}, {j}) weight {w!r} outside [0, 1]")

    @property
    def n_edges(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class ReceptiveFieldGrid:
    """Boolean similarity-above-threshold mask over a rectangular 2D grid.

    ``mask[j, i]`` covers the point (xs[i], ys[j]) with both axes
    ascending.  ``undefined_count`` reports grid points where the index
    was undefined (recorded as False, never dropped silently).
    """

    bounds: tuple[float, float, float, float]
    resolution: tuple[int, int]
    reference: tuple[float, float]
    tau: float
    mask: np.ndarray
    undefined_count: int
    index_descriptor: IndexDescriptor

    def __post_init__(self):
        nx_, ny_ = self.resolution
        if self.mask.shape != (ny_, nx_):
            raise ValidationError(f"mask shape {self.mask.shape} != resolution (ny={ny_}, nx={nx_})")

    @property
    def area(self) -> int:
        return int(self.mask.sum())


def similarity_network(matrix: FeatureMatrix, index: IndexDescriptor) -> WeightedGraph:
    """Complete weighted graph over the matrix rows, edges in (i, j) order."""
    if index.name not in NETWORK_INDICES:
        raise ValidationError(
            f"index {index.name!r} not usable for networks; expected one of {NETWORK_INDICES}"
        )
    n = matrix.n_rows
    if n < 2:
        raise DegenerateGraphError(f"need at least 2 rows to build a network, got {n}")

    if index.name == "euclidean_complement":
        distances = pairwise_values("euclidean", matrix.values)
        max_distance = float(distances.max())
        # all rows identical: every pair is maximally similar
        weights = 1.0 - distances / max_distance if max_distance > 0.0 else np.ones_like(distances)
    else:
        weights = pairwise_values(index.name, matrix.values, index.params.d, index.params.e)
        bad = np.flatnonzero(np.isnan(weights))
        if bad.size:
            i, j = condensed_to_pair(int(bad[0]), n)
            raise UndefinedInteriorityError(
                f"index {index.name!r} undefined for pair ({i}, {j}): zero-magnitude row"
            )

    pairs = ((i, j) for i in range(n - 1) for j in range(i + 1, n))
    edges = tuple((i, j, float(w)) for (i, j), w in zip(pairs, weights))
    return WeightedGraph(n, edges, matrix.labels, index)


def threshold_graph(graph: WeightedGraph, tau: float) -> WeightedGraph:
    """Keep edges with weight >= tau; tau must lie in [0, 1]."""
    if not 0.0 <= tau <= 1.0:
        raise ValidationError(f"tau must lie in [0, 1], got {tau!r}")
    kept = tuple(edge for edge in graph.edges if edge[2] >= tau)
    return WeightedGraph(graph.n_nodes, kept, graph.node_labels, graph.index_descriptor)


def receptive_field(
    index: IndexDescriptor,
    reference: tuple[float, float],
    bounds: tuple[float, float, float, float],
    resolution: tuple[int, int],
    tau: float,
) -> ReceptiveFieldGrid:
    """Evaluate the index between a fixed 2D reference and every grid point."""
    if index.name not in FIELD_INDICES:
        raise ValidationError(
            f"index {index.name!r} not usable for receptive fields; expected one of {FIELD_INDICES}"
        )
    if not 0.0 <= tau <= 1.0:
        raise ValidationError(f"tau must lie in [0, 1], got {tau!r}")
    ref = np.asarray(reference, dtype=np.float64)
    if ref.shape != (2,):
        raise ValidationError("reference must be a 2-dimensional point")
    xmin, xmax, ymin, ymax = map(float, bounds)
    if not (xmin < xmax and ymin < ymax):
        raise ValidationError(f"degenerate bounds {bounds!r}")
    nx_, ny_ = resolution
    if nx_ < 2 or ny_ < 2:
        raise ValidationError(f"resolution must be at least 2x2, got {resolution!r}")

    xs = np.linspace(xmin, xmax, nx_)
    ys = np.linspace(ymin, ymax, ny_)
    grid_x, grid_y = np.meshgrid(xs, ys)
    points = np.column_stack([grid_x.ravel(), grid_y.ravel()])
    values = one_to_many_values(index.name, ref, points, index.params.d, index.params.e)
    undefined = int(np.isnan(values).sum())
    mask = (values >= tau).reshape(ny_, nx_)  # NaN compares False: undefined cells excluded
    return ReceptiveFieldGrid(
        bounds=(xmin, xmax, ymin, ymax),
        resolution=(nx_, ny_),
        reference=(float(ref[0]), float(ref[1])),
        tau=float(tau),
        mask=mask,
        undefined_count=undefined,
        index_descriptor=index,
    )


def force_layout(graph: WeightedGraph, seed: int, iterations: int = 200) -> np.ndarray:
    """Deterministic Fruchterman-Reingold coordinates, weights as attraction.

    Backed by networkx's spring layout; same (graph, seed, iterations)
    always gives the same coordinates.
    """
    if iterations < 1:
        raise ValidationError(f"iterations must be >= 1, got {iterations}")
    g = nx.Graph()
    g.add_nodes_from(range(graph.n_nodes))
    g.add_weighted_edges_from(graph.edges)
    positions = nx.spring_layout(g, seed=seed, iterations=iterations, weight="weight")
    return np.array([positions[i] for i in range(graph.n_nodes)], dtype=np.float64)


@dataclass(frozen=True)
class SeparationReport:
    """Within/between category mean edge weights and their gap."""

    within_mean: float
    between_mean: float
    gap: float


def separation_report(graph: WeightedGraph) -> SeparationReport:
    """Mean within-category and between-category edge weight, and the gap."""
    if graph.node_labels is None:
        raise LabelsRequiredError("separation report needs node labels")
    if len(set(graph.node_labels)) < 2:
        raise LabelsRequiredError("separation report needs at least 2 categories")
    within = [w for i, j, w in graph.edges if graph.node_labels[i] == graph.node_labels[j]]
    between = [w for i, j, w in graph.edges if graph.node_labels[i] != graph.node_labels[j]]
    if not within or not between:
        raise ValidationError("need at least one within-category and one between-category edge")
    within_mean = float(np.mean(within))
    between_mean = float(np.mean(between))
    return SeparationReport(within_mean, between_mean, within_mean - between_mean)
