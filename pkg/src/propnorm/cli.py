"""Command-line pipeline: generate, normalize, compare, network,
receptive-field, slope-check.

Every file-writing command also writes a flat key=value manifest next to
its outputs, recording the tool version and all flags, so any output can
be regenerated exactly.  Commands are deterministic given their flags;
reruns produce byte-identical files.  Errors are one line on stderr with
a stable code prefix and a nonzero exit.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from pathlib import Path

import numpy as np

from . import __version__
from .datagen import DatasetConfig, build_dataset
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
    force_layout,
    receptive_field,
    separation_report,
    similarity_network,
    threshold_graph,
)
from .normalize import METHODS, normalize_matrix
from .similarity import (
    IndexParams,
    coincidence,
    euclidean,
    modified_jaccard,
    np_interiority,
    np_jaccard,
)
from .stats import load_matrix, write_matrix
from .transform import SLOPE_SAMPLE_GUIDANCE, loglog_histogram, loglog_slope

_ERROR_CODES = {
    ValidationError: "validation",
    ConstantColumnError: "constant-column",
    ZeroDispersionError: "zero-dispersion",
    DivisionByZeroError: "division-by-zero",
    UndefinedInteriorityError: "undefined-interiority",
    RangeOverflowError: "range-overflow",
    SingularityError: "singularity",
    DegenerateFitError: "degenerate-fit",
    DegenerateGraphError: "degenerate-graph",
    LabelsRequiredError: "labels-required",
}

_COMPARE_INDICES = ("euclid", "jaccard", "interiority", "coincidence", "mjaccard")
_NETWORK_INDICES = {
    "coincidence": "coincidence",
    "mjaccard": "mjaccard",
    "euclid-complement": "euclidean_complement",
}
_FIELD_INDICES = ("jaccard", "interiority", "coincidence", "mjaccard")


def _error_line(exc: PropnormError) -> str:
    code = _ERROR_CODES.get(type(exc), "error")
    return f"propnorm: error[{code}]: {exc}"


def _fmt(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _write_manifest(path: Path, entries: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"command={entries.pop('command')}\n")
        fh.write(f"version={__version__}\n")
        for key, value in entries.items():
            fh.write(f"{key}={_fmt(value)}\n")


def _parse_vector(text: str, flag: str) -> np.ndarray:
    try:
        return np.array([float(cell) for cell in text.split(",")], dtype=np.float64)
    except ValueError:
        raise ValidationError(f"{flag} expects comma-separated numbers, got {text!r}") from None


def cmd_generate(args) -> int:
    config = DatasetConfig(seed=args.seed, n_per_category=args.n, representation=args.representation)
    matrix = build_dataset(config)
    out = Path(args.out)
    write_matrix(matrix, out)
    _write_manifest(
        out.with_name(out.name + ".manifest.txt"),
        {
            "command": "generate",
            "seed": args.seed,
            "n_per_category": args.n,
            "representation": args.representation,
            "out": str(out),
            "rows": matrix.n_rows,
            "features": ",".join(matrix.feature_names),
        },
    )
    return 0


def cmd_normalize(args) -> int:
    matrix = load_matrix(args.in_path)
    normalized = normalize_matrix(matrix, args.method)
    out = Path(args.out)
    write_matrix(normalized, out)
    _write_manifest(
        out.with_name(out.name + ".manifest.txt"),
        {
            "command": "normalize",
            "method": args.method,
            "in": args.in_path,
            "out": str(out),
        },
    )
    return 0


def cmd_compare(args) -> int:
    x = _parse_vector(args.x, "--x")
    y = _parse_vector(args.y, "--y")
    if args.index == "euclid":
        value = euclidean(x, y)
    elif args.index == "jaccard":
        value = np_jaccard(x, y)
    elif args.index == "interiority":
        value = np_interiority(x, y)
    elif args.index == "coincidence":
        value = coincidence(x, y, IndexParams(d=args.d, e=args.e))
    else:
        value = modified_jaccard(x, y, d=args.d)
    print(repr(value))
    return 0


def cmd_network(args) -> int:
    matrix = load_matrix(args.in_path)
    if matrix.labels is None:
        raise LabelsRequiredError("input dataset has no label column")
    descriptor = IndexDescriptor(_NETWORK_INDICES[args.index], IndexParams(d=args.d, e=args.e))
    graph = similarity_network(matrix, descriptor)
    if args.tau is not None:
        graph = threshold_graph(graph, args.tau)
    coords = force_layout(graph, seed=args.layout_seed)
    report = separation_report(graph)

    prefix = Path(args.out)
    edges_path = prefix.with_name(prefix.name + ".edges.tsv")
    nodes_path = prefix.with_name(prefix.name + ".nodes.tsv")
    separation_path = prefix.with_name(prefix.name + ".separation.txt")
    with open(edges_path, "w", encoding="utf-8") as fh:
        for i, j, w in graph.edges:
            fh.write(f"{i}\t{j}\t{w!r}\n")
    with open(nodes_path, "w", encoding="utf-8") as fh:
        for i in range(graph.n_nodes):
            fh.write(f"{i}\t{graph.node_labels[i]}\t{coords[i, 0]!r}\t{coords[i, 1]!r}\n")
    with open(separation_path, "w", encoding="utf-8") as fh:
        fh.write(f"within_mean={report.within_mean!r}\n")
        fh.write(f"between_mean={report.between_mean!r}\n")
        fh.write(f"gap={report.gap!r}\n")
    _write_manifest(
        prefix.with_name(prefix.name + ".manifest.txt"),
        {
            "command": "network",
            "in": args.in_path,
            "index": args.index,
            "d": float(args.d),
            "e": float(args.e),
            "tau": "none" if args.tau is None else repr(float(args.tau)),
            "layout_seed": args.layout_seed,
            "nodes": graph.n_nodes,
            "edges": graph.n_edges,
            "out_edges": str(edges_path),
            "out_nodes": str(nodes_path),
            "out_separation": str(separation_path),
        },
    )
    return 0


def cmd_receptive_field(args) -> int:
    ref = _parse_vector(args.ref, "--ref")
    if ref.shape != (2,):
        raise ValidationError(f"--ref expects 2 coordinates, got {ref.shape[0]}")
    bounds = _parse_vector(args.bounds, "--bounds")
    if bounds.shape != (4,):
        raise ValidationError(f"--bounds expects xmin,xmax,ymin,ymax, got {args.bounds!r}")
    try:
        parts = [int(p) for p in args.resolution.split(",")]
    except ValueError:
        raise ValidationError(f"--resolution expects integers, got {args.resolution!r}") from None
    if len(parts) == 1:
        parts = parts * 2
    if len(parts) != 2:
        raise ValidationError(f"--resolution expects nx,ny, got {args.resolution!r}")

    descriptor = IndexDescriptor(args.index, IndexParams(d=args.d, e=args.e))
    grid = receptive_field(descriptor, (ref[0], ref[1]), tuple(bounds), tuple(parts), args.tau)

    out = Path(args.out)
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(
            "# bounds={},{},{},{} resolution={},{} index={} d={} e={} tau={} "
            "reference={},{} undefined={}\n".format(
                *map(repr, grid.bounds),
                grid.resolution[0],
                grid.resolution[1],
                descriptor.name,
                repr(descriptor.params.d),
                repr(descriptor.params.e),
                repr(grid.tau),
                repr(grid.reference[0]),
                repr(grid.reference[1]),
                grid.undefined_count,
            )
        )
        for row in grid.mask:
            fh.write("\t".join("1" if cell else "0" for cell in row) + "\n")
    _write_manifest(
        out.with_name(out.name + ".manifest.txt"),
        {
            "command": "receptive-field",
            "index": args.index,
            "d": float(args.d),
            "e": float(args.e),
            "ref": args.ref,
            "bounds": args.bounds,
            "resolution": f"{parts[0]},{parts[1]}",
            "tau": float(args.tau),
            "undefined": grid.undefined_count,
            "out": str(out),
        },
    )
    return 0


def cmd_slope_check(args) -> int:
    rng = np.random.default_rng(args.seed)
    if args.a >= args.b:
        raise ValidationError(f"need a < b, got a={args.a!r}, b={args.b!r}")
    if args.c <= 1.0:
        raise ValidationError(f"need base c > 1, got {args.c!r}")
    if args.n < 1:
        raise ValidationError(f"need n >= 1 samples, got {args.n}")
    exponents = rng.uniform(args.a, args.b, size=args.n)
    samples = np.power(args.c, exponents)
    if args.n < SLOPE_SAMPLE_GUIDANCE:
        print(
            f"propnorm: warning: {args.n} samples give a wide-confidence slope "
            f"(recommended >= {SLOPE_SAMPLE_GUIDANCE})",
            file=sys.stderr,
        )
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")  # CLI already warned above
        slope = loglog_slope(samples, args.bins)
    _, _, counts = loglog_histogram(samples, args.bins)
    print(f"slope={slope!r}")
    print(
        f"bins={args.bins} occupied={int((counts > 0).sum())} samples={args.n} "
        f"range={float(samples.min())!r},{float(samples.max())!r}"
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="propnorm",
        description="Feature normalization, proportional comparisons, and similarity networks.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="generate the two-category synthetic dataset")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, required=True, help="rows per category")
    p.add_argument("--representation", choices=("uniform", "proportional"), required=True)
    p.add_argument("--out", required=True, help="output CSV path")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("normalize", help="normalize every feature column")
    p.add_argument("--method", choices=METHODS, required=True)
    p.add_argument("--in", dest="in_path", required=True, help="input CSV path")
    p.add_argument("--out", required=True, help="output CSV path")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("compare", help="compare two vectors with one index")
    p.add_argument("--index", choices=_COMPARE_INDICES, required=True)
    p.add_argument("--x", required=True, help="first vector, comma-separated (use --x=... if it starts with '-')")
    p.add_argument("--y", required=True, help="second vector, comma-separated (use --y=... if it starts with '-')")
    p.add_argument("--d", type=float, default=1.0)
    p.add_argument("--e", type=float, default=1.0)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("network", help="build a similarity network from a dataset")
    p.add_argument("--in", dest="in_path", required=True, help="input CSV path (label column required)")
    p.add_argument("--index", choices=tuple(_NETWORK_INDICES), required=True)
    p.add_argument("--d", type=float, default=1.0)
    p.add_argument("--e", type=float, default=1.0)
    p.add_argument("--tau", type=float, default=None, help="keep edges with weight >= tau")
    p.add_argument("--layout-seed", type=int, default=0)
    p.add_argument("--out", required=True, help="output path prefix")
    p.set_defaults(func=cmd_network)

    p = sub.add_parser("receptive-field", help="threshold mask of an index around a reference")
    p.add_argument("--index", choices=_FIELD_INDICES, required=True)
    p.add_argument("--d", type=float, default=1.0)
    p.add_argument("--e", type=float, default=1.0)
    p.add_argument("--ref", required=True, help="reference point: x,y (use --ref=... if it starts with '-')")
    p.add_argument("--bounds", required=True, help="xmin,xmax,ymin,ymax (use --bounds=... if it starts with '-')")
    p.add_argument("--resolution", required=True, help="nx,ny (or one value for square)")
    p.add_argument("--tau", type=float, default=0.7)
    p.add_argument("--out", required=True, help="output grid path")
    p.set_defaults(func=cmd_receptive_field)

    p = sub.add_parser("slope-check", help="fit the log-log density slope of c**x samples")
    p.add_argument("--c", type=float, required=True, help="transform base, > 1")
    p.add_argument("--a", type=float, required=True, help="uniform domain lower bound")
    p.add_argument("--b", type=float, required=True, help="uniform domain upper bound")
    p.add_argument("--n", type=int, required=True, help="sample count")
    p.add_argument("--bins", type=int, default=40)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_slope_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PropnormError as exc:
        print(_error_line(exc), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
