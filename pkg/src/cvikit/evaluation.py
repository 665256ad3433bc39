"""CVI evaluation against the ARI ground truth.

Two comparisons are supported for each CVI score sequence:

* hit-the-best: 1 iff some clustering method is optimal under both the
  CVI and ARI (ties count, so the comparison is on argbest *sets*);
* rank-difference: both sequences are quantized onto ranks 1..N-1 over
  N-1 uniform intervals of [min, max] (optimum gets rank 1, sequences
  whose optimum is a minimum are negated first) and the L1 distance
  between the rank sequences is reported; it lies in [0, N(N-2)].

Per-dataset results aggregate into column totals plus "1224"-style
competition ranks: larger hit totals are better, smaller rank-difference
totals are better.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .data import Direction, RankSequence, ScoreMatrix, ScoreSequence
from .exceptions import InvalidInputError


def quantize_ranks(seq: ScoreSequence) -> RankSequence:
    """Quantize one score sequence onto ranks 1..N-1.

    With m = min, M = max and width w = (M - m)/(N - 1), a score in
    [M - k*w, M - (k-1)*w) gets rank k; the maximum itself is defined as
    rank 1 and the minimum lands in interval N-1.  An all-equal sequence
    degenerates to all ranks 1.
    """
    scores = np.asarray(seq.scores, dtype=float)
    if seq.direction is Direction.MIN:
        scores = -scores
    n = scores.size
    low = scores.min()
    high = scores.max()
    if high == low:
        return RankSequence(np.ones(n, dtype=np.int64))
    width = (high - low) / (n - 1)
    ranks = np.ceil((high - scores) / width).astype(np.int64)
    ranks[scores == high] = 1
    np.clip(ranks, 1, n - 1, out=ranks)
    return RankSequence(ranks)


def _rank_array(seq) -> np.ndarray:
    if isinstance(seq, RankSequence):
        return seq.ranks
    return np.asarray(seq, dtype=np.int64)


def rank_difference(a, b) -> int:
    """L1 distance between two rank sequences of equal length."""
    ra = _rank_array(a)
    rb = _rank_array(b)
    if ra.size != rb.size:
        raise InvalidInputError(f"rank sequences differ in length ({ra.size} vs {rb.size})")
    return int(np.abs(ra - rb).sum())


def _argbest(seq: ScoreSequence) -> frozenset[int]:
    scores = seq.scores
    best = scores.max() if seq.direction is Direction.MAX else scores.min()
    return frozenset(np.flatnonzero(scores == best).tolist())


def hit_the_best(cvi: ScoreSequence, ari: ScoreSequence) -> int:
    """1 iff the CVI's argbest set intersects ARI's argbest set.

    Scores are compared exactly; no epsilon is applied, so near-ties stay
    distinct (a known sensitivity of this comparison).
    """
    if len(cvi) != len(ari):
        raise InvalidInputError(f"sequences differ in length ({len(cvi)} vs {len(ari)})")
    if ari.direction is not Direction.MAX:
        raise InvalidInputError("ARI sequence must have direction '+'")
    return int(bool(_argbest(cvi) & _argbest(ari)))


@dataclass(frozen=True)
class DatasetEval:
    """Hit and rank-difference outcomes of every CVI row for one dataset."""

    dataset: str
    cvi_names: tuple[str, ...]
    hits: tuple[int, ...]
    rank_diffs: tuple[int, ...]


def evaluate_score_matrix(matrix: ScoreMatrix) -> DatasetEval:
    """Apply both comparisons to every CVI row of one score matrix."""
    ari_ranks = quantize_ranks(matrix.ari_row)
    hits = []
    diffs = []
    for row in matrix.cvi_rows:
        hits.append(hit_the_best(row, matrix.ari_row))
        diffs.append(rank_difference(quantize_ranks(row), ari_ranks))
    return DatasetEval(
        dataset=matrix.name,
        cvi_names=tuple(row.cvi_name for row in matrix.cvi_rows),
        hits=tuple(hits),
        rank_diffs=tuple(diffs),
    )


def competition_ranks(totals, *, higher_is_better: bool) -> tuple[int, ...]:
    """"1224"-style ranks: ties share the best rank, the next total skips."""
    values = np.asarray(totals, dtype=float)
    if higher_is_better:
        better = values[None, :] > values[:, None]
    else:
        better = values[None, :] < values[:, None]
    return tuple((1 + better.sum(axis=1)).astype(int).tolist())


@dataclass(frozen=True)
class EvalReport:
    """Dataset x CVI grids of hits and rank-differences with totals and ranks."""

    dataset_names: tuple[str, ...]
    cvi_names: tuple[str, ...]
    hit_table: np.ndarray
    rankdiff_table: np.ndarray
    hit_totals: tuple[int, ...]
    rankdiff_totals: tuple[int, ...]
    hit_ranks: tuple[int, ...]
    rankdiff_ranks: tuple[int, ...]


def aggregate(evals) -> EvalReport:
    """Fold per-dataset evaluations into totals and competition ranks."""
    evals = list(evals)
    if not evals:
        raise InvalidInputError("no dataset evaluations to aggregate")
    cvi_names = evals[0].cvi_names
    for ev in evals[1:]:
        if ev.cvi_names != cvi_names:
            raise InvalidInputError(
                f"dataset {ev.dataset!r} covers CVIs {ev.cvi_names}, expected {cvi_names}"
            )
    hit_table = np.array([ev.hits for ev in evals], dtype=np.int64)
    rankdiff_table = np.array([ev.rank_diffs for ev in evals], dtype=np.int64)
    hit_totals = tuple(int(t) for t in hit_table.sum(axis=0))
    rankdiff_totals = tuple(int(t) for t in rankdiff_table.sum(axis=0))
    return EvalReport(
        dataset_names=tuple(ev.dataset for ev in evals),
        cvi_names=cvi_names,
        hit_table=hit_table,
        rankdiff_table=rankdiff_table,
        hit_totals=hit_totals,
        rankdiff_totals=rankdiff_totals,
        hit_ranks=competition_ranks(hit_totals, higher_is_better=True),
        rankdiff_ranks=competition_ranks(rankdiff_totals, higher_is_better=False),
    )


def _table_rows(report: EvalReport, which: str) -> list[list[str]]:
    if which == "hit":
        table, totals, ranks = report.hit_table, report.hit_totals, report.hit_ranks
    elif which == "rankdiff":
        table, totals, ranks = report.rankdiff_table, report.rankdiff_totals, report.rankdiff_ranks
    else:
        raise InvalidInputError(f"unknown table {which!r} (expected 'hit' or 'rankdiff')")
    rows = [["dataset", *report.cvi_names]]
    for name, line in zip(report.dataset_names, table):
        rows.append([name, *[str(int(v)) for v in line]])
    rows.append(["Total", *[str(v) for v in totals]])
    rows.append(["rank", *[str(v) for v in ranks]])
    return rows


def format_report_csv(report: EvalReport, which: str) -> str:
    return "\n".join(",".join(row) for row in _table_rows(report, which)) + "\n"


def format_report_text(report: EvalReport, which: str) -> str:
    rows = _table_rows(report, which)
    widths = [max(len(row[c]) for row in rows) for c in range(len(rows[0]))]
    lines = []
    for i, row in enumerate(rows):
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
        if i == 0 or i == len(rows) - 3:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def format_score_matrix_text(matrix: ScoreMatrix, decimals: int = 3) -> str:
    """Aligned text view of a score matrix, scores shown at 3 decimals."""
    rows = [["validity", "direction", *matrix.methods]]
    for row in (matrix.ari_row, *matrix.cvi_rows):
        rows.append([row.cvi_name, row.direction.value, *[f"{s:.{decimals}f}" for s in row.scores]])
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    lines = []
    for i, row in enumerate(rows):
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
        if i == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"
