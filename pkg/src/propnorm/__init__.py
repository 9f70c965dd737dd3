"""Feature normalization for uniform and proportional features,
multiset similarity indices, and similarity-network pipelines."""

from ._kernels import BACKEND as KERNEL_BACKEND
from .datagen import (
    DatasetConfig,
    MixtureSpec,
    SIGN_PRESERVING_BASE2,
    build_dataset,
    sample_mixture,
)
from .errors import (
    ConstantColumnError,
    DegenerateFitError,
    DegenerateGraphError,
    DivisionByZeroError,
    LabelsRequiredError,
    PropnormError,
    RangeOverflowError,
    SingularityError,
    UndefinedInteriorityError,
    ValidationError,
    ZeroDispersionError,
)
from .network import (
    IndexDescriptor,
    ReceptiveFieldGrid,
    SeparationReport,
    WeightedGraph,
    force_layout,
    receptive_field,
    separation_report,
    similarity_network,
    threshold_graph,
)
from .normalize import jpn, normalize_matrix, spn, standardize
from .similarity import (
    IndexParams,
    NpSetVector,
    abs_diff,
    coincidence,
    diff,
    euclidean,
    modified_jaccard,
    nonneg_jaccard,
    np_interiority,
    np_jaccard,
    power_compare,
    ratio,
    scalar_jaccard,
)
from .stats import ColumnStats, FeatureMatrix, column_stats, load_matrix, write_matrix
from .transform import (
    TransformSpec,
    apply_transform,
    apply_transform_array,
    loglog_histogram,
    loglog_slope,
    transformed_density,
)

__version__ = "0.1.0"

__all__ = [
    "KERNEL_BACKEND",
    "__version__",
    # errors
    "PropnormError",
    "ValidationError",
    "ConstantColumnError",
    "ZeroDispersionError",
    "DivisionByZeroError",
    "UndefinedInteriorityError",
    "RangeOverflowError",
    "SingularityError",
    "DegenerateFitError",
    "DegenerateGraphError",
    "LabelsRequiredError",
    # stats
    "ColumnStats",
    "FeatureMatrix",
    "column_stats",
    "load_matrix",
    "write_matrix",
    # transform
    "TransformSpec",
    "apply_transform",
    "apply_transform_array",
    "transformed_density",
    "loglog_histogram",
    "loglog_slope",
    # normalize
    "standardize",
    "spn",
    "jpn",
    "normalize_matrix",
    # similarity
    "IndexParams",
    "NpSetVector",
    "diff",
    "abs_diff",
    "euclidean",
    "ratio",
    "scalar_jaccard",
    "nonneg_jaccard",
    "np_jaccard",
    "np_interiority",
    "coincidence",
    "modified_jaccard",
    "power_compare",
    # network
    "IndexDescriptor",
    "WeightedGraph",
    "ReceptiveFieldGrid",
    "SeparationReport",
    "similarity_network",
    "threshold_graph",
    "receptive_field",
    "force_layout",
    "separation_report",
    # datagen
    "MixtureSpec",
    "DatasetConfig",
    "SIGN_PRESERVING_BASE2",
    "build_dataset",
    "sample_mixture",
]
