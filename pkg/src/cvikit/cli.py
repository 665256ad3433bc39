"""Command-line interface.

Subcommands: ``score`` (CVI values of one labeling), ``dsi`` (separability
of one labeling), ``evaluate`` (score-matrix files to hit / rank-difference
tables), ``benchmark`` (corpus to aggregated tables), ``predict-k``
(cluster-count sweep grid), ``synth`` (seeded synthetic datasets).
Failures print ``error[<code>]: <message>`` and exit nonzero.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import __version__
from .benchmark import run_benchmark
from .cluster import ALGORITHMS, default_config
from .data import load_dataset_csv, load_label_file, load_score_matrix, save_dataset_csv
from .evaluation import (
    aggregate,
    evaluate_score_matrix,
    format_report_csv,
    format_report_text,
)
from .exceptions import CvikitError, InvalidInputError
from .kselect import DEFAULT_K_VALUES, predict_k
from .metrics import DEFAULT_CVIS, adjusted_rand_index, compute_cvi, dsi, resolve_cvi
from .synth import KINDS, generate_synthetic
from .validation import check_labels, standardize


def _comma_list(text: str) -> list[str]:
    return [item.strip() for item in text.split(",") if item.strip()]


def _parse_k_range(text: str) -> tuple[int, ...]:
    """'2:6' (inclusive) or '2,3,5'."""
    try:
        if ":" in text:
            lo, hi = text.split(":", 1)
            return tuple(range(int(lo), int(hi) + 1))
        return tuple(int(v) for v in _comma_list(text))
    except ValueError:
        raise InvalidInputError(f"cannot parse k range {text!r} (expected 'LO:HI' or list)") from None


def _load_inputs(args) -> tuple:
    dataset = load_dataset_csv(args.data)
    points = standardize(dataset.points) if getattr(args, "standardize", False) else dataset.points
    if getattr(args, "labels", None):
        labels = load_label_file(args.labels)
    elif dataset.true_labels is not None:
        labels = dataset.true_labels
    else:
        raise InvalidInputError(
            f"{args.data}: no 'label' column and no --labels file; nothing to score"
        )
    check_labels(labels, n=dataset.n)
    return dataset, points, labels


def _cmd_score(args) -> int:
    dataset, points, labels = _load_inputs(args)
    rows = []
    if args.labels and dataset.true_labels is not None:
        rows.append(("ARI", "+", adjusted_rand_index(dataset.true_labels, labels)))
    for name in args.cvis:
        result = compute_cvi(name, points, labels, subsample_cap=args.subsample_cap, seed=args.seed)
        rows.append((result.cvi_name, result.direction.value, result.value))
    if args.format == "csv":
        print("validity,direction,value")
        for name, marker, value in rows:
            print(f"{name},{marker},{value!r}")
    else:
        width = max(len(r[0]) for r in rows)
        for name, marker, value in rows:
            print(f"{name.rjust(width)}  {marker}  {value:.3f}")
    return 0


def _cmd_dsi(args) -> int:
    dataset, points, labels = _load_inputs(args)
    score = dsi(points, labels, subsample_cap=args.subsample_cap, seed=args.seed)
    print(f"{score.value!r}")
    if args.per_class:
        for c, s in enumerate(score.per_class):
            print(f"class {c}: {s!r}")
        for c in score.skipped_classes:
            print(f"class {c}: skipped (fewer than 2 members)")
    return 0


def _cmd_evaluate(args) -> int:
    matrices = [load_score_matrix(path) for path in args.scores]
    report = aggregate(evaluate_score_matrix(m) for m in matrices)
    render = format_report_csv if args.format == "csv" else format_report_text
    hit = render(report, "hit")
    diff = render(report, "rankdiff")
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        ext = "csv" if args.format == "csv" else "txt"
        (out / f"hit_table.{ext}").write_text(hit)
        (out / f"rankdiff_table.{ext}").write_text(diff)
        print(f"wrote hit_table.{ext} and rankdiff_table.{ext} to {out}")
    else:
        print("# hit-the-best")
        print(hit, end="")
        print("# rank-difference")
        print(diff, end="")
    return 0


def _cmd_benchmark(args) -> int:
    result = run_benchmark(
        corpus_dir=args.corpus,
        output_dir=args.out,
        clusterers=tuple(args.clusterers),
        cvis=tuple(args.cvis),
        seed=args.seed,
        subsample_cap=args.subsample_cap,
        apply_standardize=args.standardize,
        scores_dir=args.scores,
        labels_dir=args.labels_dir,
        fmt=args.format,
    )
    names = ", ".join(result.report.dataset_names)
    print(f"evaluated {len(result.report.dataset_names)} dataset(s): {names}")
    print(f"reports written to {args.out}")
    return 0


def _cmd_predict_k(args) -> int:
    dataset = load_dataset_csv(args.data)
    points = standardize(dataset.points) if args.standardize else dataset.points
    true_c = dataset.n_classes
    k_values = args.k_range
    grid: dict[str, dict[str, object]] = {}
    for cvi in args.cvis:
        grid[cvi] = {}
        for alg in args.clusterers:
            cfg = default_config(alg, max(k_values), seed=args.seed)
            prediction = predict_k(points, cfg, cvi, k_values, true_c,
                                   subsample_cap=args.subsample_cap)
            grid[cvi][alg] = prediction
    name_width = max(len(resolve_cvi(c)) for c in args.cvis) + 6
    header = "validity".ljust(name_width) + "  ".join(a.rjust(8) for a in args.clusterers)
    print(f"# sweep k in {list(k_values)}" + (f", true c = {true_c}" if true_c else ""))
    print(header)
    print("-" * len(header))
    for cvi in args.cvis:
        first = next(iter(grid[cvi].values()))
        cells = []
        for alg in args.clusterers:
            p = grid[cvi][alg]
            mark = "*" if p.success else " "
            cells.append(f"{p.k_hat}{mark}".rjust(8))
        print(first.cvi_name.ljust(name_width) + "  ".join(cells))
    if true_c:
        print("(* marks a predicted count equal to the true class count)")
    return 0


def _cmd_synth(args) -> int:
    params: dict = {}
    if args.kind == "blobs":
        params = dict(
            n_clusters=args.clusters,
            n_per_cluster=args.per_cluster,
            std=args.std,
            spread=args.spread,
            dim=args.dim,
        )
    elif args.kind == "rings":
        params = dict(
            radii=tuple(float(r) for r in _comma_list(args.radii)),
            n_per_ring=args.per_ring,
            noise=args.noise,
        )
    else:
        params = dict(n_per_moon=args.per_moon, noise=args.noise)
    dataset = generate_synthetic(args.kind, seed=args.seed, name=Path(args.out).stem, **params)
    save_dataset_csv(dataset, args.out)
    print(f"wrote {dataset.n} points, {dataset.d} features, {dataset.n_classes} classes to {args.out}")
    return 0


def _add_common(parser, *, cvis=True, subsample=True, fmt=False, seed=True, std=False):
    if seed:
        parser.add_argument("--seed", type=int, default=0, help="base RNG seed")
    if cvis:
        parser.add_argument(
            "--cvis", type=_comma_list, default=list(DEFAULT_CVIS),
            help="comma-separated CVIs (default: %(default)s)",
        )
    if subsample:
        parser.add_argument(
            "--subsample-cap", type=int, default=None,
            help="bound separability cost by subsampling to at most N points",
        )
    if fmt:
        parser.add_argument("--format", choices=("csv", "text"), default="csv")
    if std:
        parser.add_argument(
            "--standardize", action="store_true",
            help="scale features to zero mean and unit variance before clustering/scoring",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cvikit",
        description="Cluster validity indices and the tooling to evaluate them.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("score", help="CVI values of one labeling of one dataset")
    p.add_argument("data", help="canonical dataset CSV")
    p.add_argument("--labels", help="label CSV (default: dataset's own label column)")
    _add_common(p, fmt=True, std=True)
    p.set_defaults(func=_cmd_score)

    p = sub.add_parser("dsi", help="distance separability of one labeling")
    p.add_argument("data", help="canonical dataset CSV")
    p.add_argument("--labels", help="label CSV (default: dataset's own label column)")
    p.add_argument("--per-class", action="store_true", help="also print per-class statistics")
    _add_common(p, cvis=False, std=True)
    p.set_defaults(func=_cmd_dsi)

    p = sub.add_parser("evaluate", help="hit / rank-difference tables from score-matrix files")
    p.add_argument("scores", nargs="+", help="score-matrix CSV file(s)")
    p.add_argument("--out", help="directory to write tables to (default: print)")
    _add_common(p, cvis=False, subsample=False, seed=False, fmt=True)
    p.set_defaults(func=_cmd_evaluate)

    p = sub.add_parser("benchmark", help="cluster + score a corpus, aggregate tables")
    p.add_argument("--corpus", help="directory of canonical dataset CSVs")
    p.add_argument("--scores", help="directory of precomputed score-matrix CSVs")
    p.add_argument("--labels-dir", help="directory of '<dataset>__<method>.csv' label files")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument(
        "--clusterers", type=_comma_list, default=list(ALGORITHMS),
        help="comma-separated clusterers (default: %(default)s)",
    )
    _add_common(p, fmt=True, std=True)
    p.set_defaults(func=_cmd_benchmark)

    p = sub.add_parser("predict-k", help="sweep k and report each CVI's optimal count")
    p.add_argument("data", help="canonical dataset CSV")
    p.add_argument(
        "--clusterers", type=_comma_list, default=["kmeans", "gmm"],
        help="comma-separated clusterers (default: %(default)s)",
    )
    p.add_argument(
        "--k-range", type=_parse_k_range, default=DEFAULT_K_VALUES,
        help="swept counts, 'LO:HI' inclusive or comma list (default: 2:6)",
    )
    _add_common(p, std=True)
    p.set_defaults(func=_cmd_predict_k)

    p = sub.add_parser("synth", help="write a seeded synthetic labeled dataset")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("--out", required=True, help="output CSV path")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--clusters", type=int, default=3, help="blobs: number of clusters")
    p.add_argument("--per-cluster", type=int, default=50, help="blobs: points per cluster")
    p.add_argument("--std", type=float, default=1.0, help="blobs: per-cluster std")
    p.add_argument("--spread", type=float, default=10.0, help="blobs: min center separation")
    p.add_argument("--dim", type=int, default=2, help="blobs: dimensionality")
    p.add_argument("--radii", default="1,3", help="rings: comma-separated radii (0 = center blob)")
    p.add_argument("--per-ring", type=int, default=100, help="rings: points per ring")
    p.add_argument("--per-moon", type=int, default=100, help="moons: points per moon")
    p.add_argument("--noise", type=float, default=0.05, help="rings/moons: jitter std")
    p.set_defaults(func=_cmd_synth)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except CvikitError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
