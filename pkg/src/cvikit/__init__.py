"""cvikit: cluster validity indices and the tooling to evaluate them.

The package bundles a distance-separability index built on the
two-sample KS statistic, six classical internal validity indices, the
adjusted Rand index, three reference clusterers with a scikit-learn
estimator surface, rank-based CVI comparison metrics, and a benchmark
harness with a CLI.
"""

__version__ = "0.1.0"

from .cluster import (
    ClusteringConfig,
    GaussianMixtureEM,
    KMeans,
    WardLinkage,
    default_config,
    gmm_em,
    kmeans,
    make_clusterer,
    ward_linkage,
)
from .data import (
    Dataset,
    Direction,
    DistanceMultiset,
    Labeling,
    RankSequence,
    ScoreMatrix,
    ScoreSequence,
    load_dataset_csv,
    load_label_file,
    load_score_matrix,
    save_dataset_csv,
    save_score_matrix,
)
from .distances import bcd_set, icd_set, pairwise_distances
from .evaluation import (
    DatasetEval,
    EvalReport,
    aggregate,
    competition_ranks,
    evaluate_score_matrix,
    hit_the_best,
    quantize_ranks,
    rank_difference,
)
from .exceptions import CvikitError
from .kselect import KPrediction, predict_k
from .ks import ks_two_sample
from .metrics import (
    CVI_REGISTRY,
    DEFAULT_CVIS,
    CviResult,
    DsiScore,
    adjusted_rand_index,
    calinski_harabasz,
    compute_cvi,
    davies_bouldin,
    dsi,
    dsi_score,
    dunn_index,
    i_index,
    silhouette,
    wb_index,
)
from .synth import blobs, generate_synthetic, moons, rings

__all__ = [
    "CVI_REGISTRY",
    "ClusteringConfig",
    "CviResult",
    "CvikitError",
    "DEFAULT_CVIS",
    "Dataset",
    "DatasetEval",
    "Direction",
    "DistanceMultiset",
    "DsiScore",
    "EvalReport",
    "GaussianMixtureEM",
    "KMeans",
    "KPrediction",
    "Labeling",
    "RankSequence",
    "ScoreMatrix",
    "ScoreSequence",
    "WardLinkage",
    "adjusted_rand_index",
    "aggregate",
    "bcd_set",
    "blobs",
    "calinski_harabasz",
    "competition_ranks",
    "compute_cvi",
    "davies_bouldin",
    "default_config",
    "dsi",
    "dsi_score",
    "dunn_index",
    "evaluate_score_matrix",
    "generate_synthetic",
    "gmm_em",
    "hit_the_best",
    "i_index",
    "icd_set",
    "kmeans",
    "ks_two_sample",
    "load_dataset_csv",
    "load_label_file",
    "load_score_matrix",
    "make_clusterer",
    "moons",
    "pairwise_distances",
    "predict_k",
    "quantize_ranks",
    "rank_difference",
    "rings",
    "save_dataset_csv",
    "save_score_matrix",
    "silhouette",
    "wb_index",
    "ward_linkage",
]
