import numpy as np
import pytest

from cvikit.benchmark import build_score_matrix, run_benchmark
from cvikit.data import load_score_matrix, save_dataset_csv
from cvikit.evaluation import evaluate_score_matrix
from cvikit.exceptions import InvalidInputError
from cvikit.synth import blobs


def write_corpus(tmp_path, names=("alpha",), seed0=3):
    corpus = tmp_path / "corpus"
    corpus.mkdir(exist_ok=True)
    for i, name in enumerate(names):
        data = blobs(n_clusters=2, n_per_cluster=25, std=1.0, spread=120.0,
                     seed=seed0 + i, name=name)
        save_dataset_csv(data, corpus / f"{name}.csv")
    return corpus


class TestBuildScoreMatrix:
    def test_perfect_corpus_hits(self, tmp_path):
        data = blobs(n_clusters=2, n_per_cluster=25, std=1.0, spread=120.0, seed=3)
        matrix = build_score_matrix(data, clusterers=("kmeans", "ward"), cvis=("dsi",))
        assert matrix.methods == ("kmeans", "ward")
        # both methods recover the truth, so ARI ties at 1 and DSI must tie too
        ev = evaluate_score_matrix(matrix)
        assert ev.hits == (1,)
        assert ev.rank_diffs == (0,)

    def test_requires_labels(self):
        data = blobs(n_clusters=2, n_per_cluster=10, seed=0)
        unlabeled = type(data)(points=data.points, true_labels=None, name="x")
        with pytest.raises(InvalidInputError):
            build_score_matrix(unlabeled)

    def test_external_labels_add_column(self, tmp_path):
        data = blobs(n_clusters=2, n_per_cluster=15, std=1.0, spread=100.0, seed=1)
        matrix = build_score_matrix(
            data, clusterers=("kmeans",), cvis=("dsi", "ch"),
            external_labels={"spectral": data.true_labels},
        )
        assert matrix.methods == ("kmeans", "spectral")
        assert matrix.ari_row.scores[1] == 1.0


class TestRunBenchmark:
    def test_small_corpus_end_to_end(self, tmp_path):
        corpus = write_corpus(tmp_path, ("alpha", "beta"))
        out = tmp_path / "out"
        result = run_benchmark(corpus, out, clusterers=("kmeans", "ward"), cvis=("dsi", "ch"))
        assert result.report.dataset_names == ("alpha", "beta")
        assert (out / "hit_table.csv").exists()
        assert (out / "rankdiff_table.csv").exists()
        assert (out / "scores" / "alpha.csv").exists()
        # emitted matrices reload cleanly
        reloaded = load_score_matrix(out / "scores" / "alpha.csv")
        assert reloaded.methods == ("kmeans", "ward")

    def test_score_matrix_passthrough(self, tmp_path, wine_scores_path):
        scores = tmp_path / "scores_in"
        scores.mkdir()
        for name in ("a", "b", "c"):
            (scores / f"{name}.csv").write_text(wine_scores_path.read_text())
        out = tmp_path / "out"
        result = run_benchmark(None, out, scores_dir=scores)
        report = result.report
        assert len(report.dataset_names) == 3
        assert report.hit_table.shape == (3, 9)
        # totals are column sums: every row is the same fixture
        assert report.hit_totals == tuple(3 * h for h in (1, 0, 1, 0, 1, 1, 1, 0, 1))
        assert report.rankdiff_totals == tuple(3 * d for d in (9, 1, 3, 1, 1, 0, 0, 7, 0))

    def test_deterministic_reports(self, tmp_path):
        corpus = write_corpus(tmp_path)
        out1, out2 = tmp_path / "o1", tmp_path / "o2"
        for out in (out1, out2):
            run_benchmark(corpus, out, clusterers=("kmeans", "gmm"), cvis=("dsi",), seed=9)
        for rel in ("hit_table.csv", "rankdiff_table.csv", "scores/alpha.csv"):
            assert (out1 / rel).read_bytes() == (out2 / rel).read_bytes()

    def test_unlabeled_datasets_skipped(self, tmp_path, caplog):
        corpus = write_corpus(tmp_path, ("good",))
        (corpus / "bad.csv").write_text("f0,f1\n0,0\n1,1\n4,4\n")
        result = run_benchmark(corpus, None, clusterers=("kmeans", "ward"), cvis=("dsi",))
        assert result.report.dataset_names == ("good",)

    def test_labels_dir_column(self, tmp_path):
        corpus = write_corpus(tmp_path, ("alpha",))
        labels_dir = tmp_path / "labels"
        labels_dir.mkdir()
        truth = np.repeat([0, 1], 25)
        lines = "cluster\n" + "\n".join(str(v) for v in truth) + "\n"
        (labels_dir / "alpha__birch.csv").write_text(lines)
        result = run_benchmark(corpus, None, clusterers=("kmeans",), cvis=("dsi",),
                               labels_dir=labels_dir)
        assert result.matrices[0].methods == ("kmeans", "birch")

    def test_no_inputs_rejected(self):
        with pytest.raises(InvalidInputError):
            run_benchmark(None, None)
