"""Classifier toolkit built around a direct least-squares solve.

The core pieces: a minimum-norm least-squares layer on top of the
singular value decomposition (:mod:`elmkit.linalg`), a classifier with
a frozen random hidden layer trained by that solve (:mod:`elmkit.elm`),
an iterative momentum-descent baseline (:mod:`elmkit.mlp`), a dataset
pipeline with a synthetic multispectral generator (:mod:`elmkit.data`),
and an evaluation and benchmarking harness (:mod:`elmkit.evaluate`).
"""

from .data import (
    ConfigFormatError,
    CsvFormatError,
    LabeledDataset,
    ScalingParams,
    SplitSpec,
    SyntheticConfig,
    apply_scaling,
    default_split_spec,
    fit_scaling,
    generate_synthetic,
    littleport_like_config,
    load_csv,
    load_feature_csv,
    load_synthetic_config,
    save_csv,
    save_synthetic_config,
    scale_features,
    stratified_split,
)
from .elm import (
    ACTIVATIONS,
    ElmConfig,
    ElmModel,
    build_hidden_matrix,
    decode_scores,
    encode_targets,
    init_random_layer,
    predict,
    predict_scores,
    train_elm,
    training_cost,
)
from .evaluate import (
    BenchmarkResult,
    ConfusionMatrix,
    EvalReport,
    SweepEntry,
    SweepResult,
    benchmark,
    confusion,
    dataset_fingerprint,
    evaluate,
    model_predict,
    sweep_hidden_nodes,
)
from .linalg import (
    LinalgError,
    SvdConvergenceError,
    SvdFactors,
    matmul,
    min_norm_lstsq,
    pseudoinverse,
    svd,
)
from .mlp import (
    MlpConfig,
    MlpDivergenceError,
    MlpModel,
    init_mlp_params,
    mlp_cost,
    mlp_forward,
    mlp_gradient,
    mlp_predict,
    mlp_predict_scores,
    train_mlp,
)
from .modelio import ModelFormatError, load_model, save_model

__version__ = "0.1.0"
