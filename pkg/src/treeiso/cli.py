"""Command-line front end.

Subcommands:

* ``cluster``: CSV points -> per-point labels (CSV ``index,cluster``, -1 for
  residue) plus a summary on stderr.
* ``profile``: CSV points -> JSON outlier-profile document.
* ``eval``: predicted labels vs truth labels -> misclassification rate.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .core import DataSet, ScalingSpec, as_fraction
from .evaluate import misclassification_rate
from .pipeline import cluster_dataset, profile_dataset


def read_points(path, header=False, label_column=None) -> DataSet:
    """Load a CSV of points, one per row, numeric feature columns.

    ``label_column`` selects a ground-truth label column by name (requires
    a header) or by integer index."""
    with open(path, newline="", encoding="utf-8") as fh:
        rows = [row for row in csv.reader(fh) if row]
    names = None
    if header:
        if not rows:
            raise ValueError("no points in input file")
        names = rows[0]
        rows = rows[1:]
    if not rows:
        raise ValueError("no points in input file")
    label_idx = None
    if label_column is not None:
        try:
            label_idx = int(label_column)
        except ValueError:
            if names is None:
                raise ValueError("label column by name requires --header")
            if label_column not in names:
                raise ValueError(f"no column named {label_column!r}")
            label_idx = names.index(label_column)
    points, labels = [], []
    for lineno, row in enumerate(rows, start=2 if header else 1):
        if label_idx is not None:
            labels.append(row[label_idx])
            row = [v for i, v in enumerate(row) if i != label_idx]
        try:
            points.append([float(v) for v in row])
        except ValueError:
            raise ValueError(f"non-numeric value on line {lineno} of {path} "
                             "(forgot --header or --label-column?)")
    return DataSet(points, labels=labels if labels else None)


def write_labels(stream, labels):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["index", "cluster"])
    for i, lab in enumerate(labels):
        writer.writerow([i, lab])


def read_labels(path):
    """Read a labels CSV: either ``index,cluster`` rows (our own output) or
    a single label column; a header row is detected and skipped."""
    with open(path, newline="", encoding="utf-8") as fh:
        rows = [row for row in csv.reader(fh) if row]
    if not rows:
        raise ValueError(f"no labels in {path}")
    looks_like_header = (len(rows) > 1 and not _is_number(rows[0][0])
                         and all(_is_number(r[0]) for r in rows[1:]))
    if looks_like_header:
        rows = rows[1:]
    if len(rows[0]) >= 2:
        pairs = sorted((int(r[0]), r[1]) for r in rows)
        return [lab for _i, lab in pairs]
    return [r[0] for r in rows]


def _is_number(s) -> bool:
    try:
        float(s)
        return True
    except ValueError:
        return False


def _scaling_from_args(args) -> ScalingSpec:
    if args.scaling == "global":
        return ScalingSpec("global", sigma=args.sigma)
    return ScalingSpec("local", sigma=args.sigma, nu=args.nu)


def _open_output(path):
    if path is None:
        return sys.stdout, False
    return open(path, "w", encoding="utf-8", newline=""), True


def cmd_cluster(args) -> int:
    data = read_points(args.input, header=args.header,
                       label_column=args.label_column)
    result = cluster_dataset(
        data,
        k=args.k,
        scaling=_scaling_from_args(args),
        exponent=args.exponent,
        alpha=as_fraction(args.alpha),
        bits=args.quant_bits,
        root=args.root,
        postprocess=not args.no_postprocess,
        complete=args.complete_labels,
    )
    stream, close = _open_output(args.output)
    try:
        write_labels(stream, result.labels)
    finally:
        if close:
            stream.close()
    sub = result.subpartition
    print(f"isoperimetry: {result.value}", file=sys.stderr)
    print(f"residue: {sub.residue_number}", file=sys.stderr)
    for j, flow in enumerate(sub.part_costs):
        print(f"part {j}: size {len(sub.parts[j])}, flow {flow}", file=sys.stderr)
    return 0


def cmd_profile(args) -> int:
    data = read_points(args.input, header=args.header,
                       label_column=args.label_column)
    result = profile_dataset(
        data,
        k=args.k,
        scaling=_scaling_from_args(args),
        exponent=args.exponent,
        bits=args.quant_bits,
        root=args.root,
        sigma_s=args.sigma_s,
        epsilon=as_fraction(args.epsilon),
        alpha_max=None if args.alpha_max is None else as_fraction(args.alpha_max),
    )
    doc = result.to_document()
    text = json.dumps(doc, indent=2, sort_keys=True)
    stream, close = _open_output(args.output)
    try:
        stream.write(text + "\n")
    finally:
        if close:
            stream.close()
    return 0


def cmd_eval(args) -> int:
    predicted = [int(v) for v in read_labels(args.predicted)]
    truth = read_labels(args.truth)
    rate = misclassification_rate(predicted, truth)
    print(f"{rate:.6f}")
    return 0


def _add_ingest_flags(p):
    p.add_argument("input", help="CSV file, one point per row")
    p.add_argument("--header", action="store_true",
                   help="first row is a header")
    p.add_argument("--label-column", default=None,
                   help="ground-truth label column (name or index); "
                        "excluded from the features")


def _add_pipeline_flags(p):
    p.add_argument("--k", type=int, required=True, help="number of clusters")
    p.add_argument("--scaling", choices=["global", "local"], default="global")
    p.add_argument("--sigma", type=float, default=1.0,
                   help="kernel scale parameter")
    p.add_argument("--nu", type=int, default=7,
                   help="neighbour count for local scaling")
    p.add_argument("--exponent", choices=["eq1", "eq5"], default="eq5",
                   help="kernel form: exp(-d/(2*sigma^2)) or exp(-d/sigma)")
    p.add_argument("--quant-bits", type=int, default=32,
                   help="denominator exponent of the exact quantity grid")
    p.add_argument("--root", type=int, default=None,
                   help="tree root vertex (default: maximum-weight vertex)")
    p.add_argument("--seed", type=int, default=0,
                   help="recorded for provenance; the pipeline is deterministic")
    p.add_argument("--output", default=None, help="output file (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treeiso",
        description="Exact minimum-isoperimetry tree clustering and outlier profiling",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_cluster = sub.add_parser("cluster", help="cluster a CSV of points")
    _add_ingest_flags(p_cluster)
    _add_pipeline_flags(p_cluster)
    p_cluster.add_argument("--alpha", default="0",
                           help="potential scale (exact rational, e.g. 1/2 or 0.25)")
    p_cluster.add_argument("--no-postprocess", action="store_true",
                           help="skip residue reduction")
    p_cluster.add_argument("--complete-labels", action="store_true",
                           help="assign residue points to the nearest part")
    p_cluster.set_defaults(func=cmd_cluster)

    p_profile = sub.add_parser("profile", help="outlier profile of a CSV of points")
    _add_ingest_flags(p_profile)
    _add_pipeline_flags(p_profile)
    p_profile.add_argument("--sigma-s", type=float, default=0.5,
                           help="interval-measure scale")
    p_profile.add_argument("--alpha-max", default=None,
                           help="right end of the sweep (default: automatic)")
    p_profile.add_argument("--epsilon", default="0.01",
                           help="breakpoint precision")
    p_profile.set_defaults(func=cmd_profile)

    p_eval = sub.add_parser("eval", help="misclassification rate of a labelling")
    p_eval.add_argument("predicted", help="predicted labels CSV (index,cluster)")
    p_eval.add_argument("truth", help="truth labels CSV")
    p_eval.set_defaults(func=cmd_eval)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
