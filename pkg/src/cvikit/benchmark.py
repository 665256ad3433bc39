"""Benchmark harness: datasets x clusterers x CVIs to evaluation tables.

Clustering and scoring are pluggable stages joined by files, so label
files produced by external clusterers and score matrices computed
elsewhere slot in next to the built-in pipeline without code changes.
All randomness flows from the single ``seed`` argument; identical inputs
produce byte-identical reports.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path

from .cluster import ALGORITHMS, default_config, run_config
from .data import (
    Dataset,
    Direction,
    Labeling,
    ScoreMatrix,
    ScoreSequence,
    load_dataset_csv,
    load_label_file,
    load_score_matrix,
    save_score_matrix,
)
from .evaluation import (
    EvalReport,
    aggregate,
    evaluate_score_matrix,
    format_report_csv,
    format_report_text,
)
from .exceptions import CvikitError, InvalidInputError
from .metrics import CVI_REGISTRY, DEFAULT_CVIS, adjusted_rand_index, compute_cvi, resolve_cvi
from .validation import standardize

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BenchmarkResult:
    report: EvalReport
    matrices: tuple[ScoreMatrix, ...]


def build_score_matrix(
    dataset: Dataset,
    clusterers=ALGORITHMS,
    cvis=DEFAULT_CVIS,
    *,
    seed: int = 0,
    subsample_cap: int | None = None,
    apply_standardize: bool = False,
    external_labels: dict[str, object] | None = None,
) -> ScoreMatrix:
    """Cluster one labeled dataset with every method and score every CVI.

    ``external_labels`` maps extra method names to precomputed label
    vectors (e.g. loaded from label files).  A method whose clustering or
    scoring fails is omitted with a warning; at least two method columns
    must survive.
    """
    if dataset.true_labels is None:
        raise InvalidInputError(f"dataset {dataset.name!r} has no ground-truth labels")
    X = standardize(dataset.points) if apply_standardize else dataset.points
    k = dataset.n_classes
    cvi_keys = [resolve_cvi(c) for c in cvis]

    methods: list[str] = []
    ari_scores: list[float] = []
    cvi_scores: dict[str, list[float]] = {key: [] for key in cvi_keys}

    candidates: list[tuple[str, object]] = [(alg, None) for alg in clusterers]
    for name in sorted(external_labels or {}):
        candidates.append((name, (external_labels or {})[name]))

    for method, preset in candidates:
        try:
            if preset is None:
                labeling = run_config(X, default_config(method, k, seed=seed))
            else:
                labeling = Labeling.from_assignments(preset)
                if len(labeling) != dataset.n:
                    raise InvalidInputError(
                        f"label file for {method!r} has {len(labeling)} rows, expected {dataset.n}"
                    )
            values = {
                key: compute_cvi(key, X, labeling, subsample_cap=subsample_cap, seed=seed).value
                for key in cvi_keys
            }
            ari = adjusted_rand_index(dataset.true_labels, labeling)
        except CvikitError as exc:
            logger.warning("%s: method %r omitted: %s", dataset.name, method, exc)
            continue
        methods.append(method)
        ari_scores.append(ari)
        for key in cvi_keys:
            cvi_scores[key].append(values[key])

    if len(methods) < 2:
        raise InvalidInputError(
            f"dataset {dataset.name!r}: only {len(methods)} usable method(s), need at least 2"
        )
    rows = tuple(
        ScoreSequence(
            cvi_name=CVI_REGISTRY[key].display_name,
            scores=cvi_scores[key],
            direction=CVI_REGISTRY[key].direction,
        )
        for key in cvi_keys
    )
    return ScoreMatrix(
        methods=tuple(methods),
        ari_row=ScoreSequence(cvi_name="ARI", scores=ari_scores, direction=Direction.MAX),
        cvi_rows=rows,
        name=dataset.name,
    )


def _external_labels_for(dataset_name: str, labels_dir: Path | None) -> dict[str, object]:
    """Label files named ``<dataset>__<method>.csv`` for one dataset."""
    if labels_dir is None:
        return {}
    out = {}
    for path in sorted(Path(labels_dir).glob(f"{dataset_name}__*.csv")):
        method = path.stem.split("__", 1)[1]
        out[method] = load_label_file(path)
    return out


def run_benchmark(
    corpus_dir=None,
    output_dir=None,
    *,
    clusterers=ALGORITHMS,
    cvis=DEFAULT_CVIS,
    seed: int = 0,
    subsample_cap: int | None = None,
    apply_standardize: bool = False,
    scores_dir=None,
    labels_dir=None,
    fmt: str = "csv",
) -> BenchmarkResult:
    """Evaluate every dataset in ``corpus_dir`` and/or every score matrix
    in ``scores_dir``; write per-dataset matrices plus hit and
    rank-difference tables (with totals and competition ranks) to
    ``output_dir``.
    """
    if corpus_dir is None and scores_dir is None:
        raise InvalidInputError("need a corpus directory or a scores directory")

    matrices: list[ScoreMatrix] = []
    if corpus_dir is not None:
        for path in sorted(Path(corpus_dir).glob("*.csv")):
            dataset = load_dataset_csv(path)
            if dataset.true_labels is None:
                logger.warning("%s: skipped (no ground-truth labels)", dataset.name)
                continue
            try:
                matrices.append(
                    build_score_matrix(
                        dataset,
                        clusterers=clusterers,
                        cvis=cvis,
                        seed=seed,
                        subsample_cap=subsample_cap,
                        apply_standardize=apply_standardize,
                        external_labels=_external_labels_for(dataset.name, labels_dir),
                    )
                )
            except CvikitError as exc:
                logger.warning("%s: skipped: %s", dataset.name, exc)
    if scores_dir is not None:
        for path in sorted(Path(scores_dir).glob("*.csv")):
            matrices.append(load_score_matrix(path))

    if not matrices:
        raise InvalidInputError("no usable datasets or score matrices found")
    report = aggregate(evaluate_score_matrix(m) for m in matrices)

    if output_dir is not None:
        output_dir = Path(output_dir)
        (output_dir / "scores").mkdir(parents=True, exist_ok=True)
        for matrix in matrices:
            save_score_matrix(matrix, output_dir / "scores" / f"{matrix.name}.csv")
        if fmt == "text":
            (output_dir / "hit_table.txt").write_text(format_report_text(report, "hit"))
            (output_dir / "rankdiff_table.txt").write_text(format_report_text(report, "rankdiff"))
        else:
            (output_dir / "hit_table.csv").write_text(format_report_csv(report, "hit"))
            (output_dir / "rankdiff_table.csv").write_text(format_report_csv(report, "rankdiff"))
    return BenchmarkResult(report=report, matrices=tuple(matrices))
