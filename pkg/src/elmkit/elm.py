"""Single-hidden-layer feedforward classifier trained by a direct
least-squares solve.

The hidden layer (input weights and biases) is drawn once at random and
never adjusted.  Training reduces to collecting the hidden-layer
activations for all samples into one matrix and solving a linear system
for the output weights by minimum-norm least squares.  There is no
iteration and no learning rate; the only knobs are the hidden-layer
width, the activation, and the seed.

Given train features X (K x p), frozen weights W (H x p) and biases c:

    A[j, i] = f(W[i] . X[j] + c[i])          (K x H activations)
    B       = argmin ||A B - Y||  with minimum norm   (H x m outputs)

where Y one-hot encodes the labels.  Prediction scores new samples with
``f(X W^T + c) B`` and picks the best-scoring class.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .data import LabeledDataset, ScalingParams, fit_scaling, scale_features
from .linalg import min_norm_lstsq


def _sigmoid(x):
    # evaluate from the side that cannot overflow
    out = np.empty_like(x, dtype=np.float64)
    pos = x >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-x[pos]))
    ex = np.exp(x[~pos])
    out[~pos] = ex / (1.0 + ex)
    return out


def _hardlimit(x):
    return (np.asarray(x) >= 0.0).astype(np.float64)


ACTIVATIONS = {
    "sigmoid": _sigmoid,
    "tanh": np.tanh,
    "hardlimit": _hardlimit,
}


@dataclass(frozen=True)
class ElmConfig:
    """Hyperparameters for the randomized-hidden-layer classifier.

    ``weight_range`` bounds the uniform draw for both the input weights
    and the biases.
    """

    hidden_nodes: int = 300
    activation: str = "sigmoid"
    seed: int = 0
    weight_range: tuple[float, float] = (-1.0, 1.0)
    rank_tol: float = 1e-10

    def __post_init__(self):
        if self.hidden_nodes < 1:
            raise ValueError(f"hidden_nodes must be >= 1, got {self.hidden_nodes}")
        if self.activation not in ACTIVATIONS:
            raise ValueError(
                f"unknown activation '{self.activation}'; choose from {sorted(ACTIVATIONS)}"
            )
        lo, hi = self.weight_range
        if not (np.isfinite(lo) and np.isfinite(hi) and lo < hi):
            raise ValueError(f"weight_range must be a finite (low, high) pair, got {self.weight_range}")
        if self.rank_tol < 0:
            raise ValueError(f"rank_tol must be non-negative, got {self.rank_tol}")
        object.__setattr__(self, "weight_range", (float(lo), float(hi)))


@dataclass(frozen=True)
class ElmModel:
    """Trained classifier: frozen hidden layer plus solved output weights.

    ``weights`` is (hidden_nodes, n_features), ``biases`` is
    (hidden_nodes,), ``output_weights`` is (hidden_nodes, n_classes).
    ``scaling`` is the feature map fitted on the training split.
    ``train_time_s`` is informational and is not serialized.
    """

    weights: np.ndarray
    biases: np.ndarray
    output_weights: np.ndarray
    config: ElmConfig
    class_names: tuple[str, ...]
    scaling: ScalingParams
    train_time_s: float = field(default=0.0, compare=False)

    def __post_init__(self):
        for name in ("weights", "biases", "output_weights"):
            arr = np.asarray(getattr(self, name), dtype=np.float64)
            arr = arr.copy()
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        h, p = self.weights.shape
        if self.biases.shape != (h,):
            raise ValueError(f"biases shape {self.biases.shape} does not match {h} hidden nodes")
        if self.output_weights.shape != (h, len(self.class_names)):
            raise ValueError(
                f"output_weights shape {self.output_weights.shape} does not match "
                f"({h}, {len(self.class_names)})"
            )
        object.__setattr__(self, "class_names", tuple(str(n) for n in self.class_names))

    @property
    def n_features(self) -> int:
        return self.weights.shape[1]

    @property
    def n_classes(self) -> int:
        return len(self.class_names)


def init_random_layer(n_features: int, config: ElmConfig) -> tuple[np.ndarray, np.ndarray]:
    """Draw the frozen hidden layer for the given input width.

    Both the (hidden_nodes, n_features) weight matrix and the bias
    vector come from one uniform stream seeded by ``config.seed``;
    weights are drawn first, then biases, so the layer is reproducible.
    """
    if n_features < 1:
        raise ValueError(f"n_features must be >= 1, got {n_features}")
    lo, hi = config.weight_range
    rng = np.random.default_rng(config.seed)
    weights = rng.uniform(lo, hi, size=(config.hidden_nodes, n_features))
    biases = rng.uniform(lo, hi, size=config.hidden_nodes)
    return weights, biases


def build_hidden_matrix(features: np.ndarray, weights: np.ndarray, biases: np.ndarray,
                        activation: str) -> np.ndarray:
    """Activations of every hidden node on every sample: (samples, hidden)."""
    features = np.asarray(features, dtype=np.float64)
    if features.ndim != 2:
        raise ValueError(f"features must be 2-D, got shape {features.shape}")
    if features.shape[1] != weights.shape[1]:
        raise ValueError(
            f"feature width {features.shape[1]} does not match weights width {weights.shape[1]}"
        )
    f = ACTIVATIONS[activation]
    return f(features @ weights.T + biases)


def encode_targets(labels: np.ndarray, n_classes: int) -> np.ndarray:
    """One-hot target matrix, one row per sample, one column per class."""
    labels = np.asarray(labels, dtype=np.int64)
    if labels.ndim != 1:
        raise ValueError("labels must be a 1-D vector")
    if labels.size and (labels.min() < 0 or labels.max() >= n_classes):
        raise ValueError(f"labels out of range [0, {n_classes})")
    targets = np.zeros((labels.shape[0], n_classes))
    targets[np.arange(labels.shape[0]), labels] = 1.0
    return targets


def decode_scores(scores: np.ndarray) -> np.ndarray:
    """Predicted label per row: highest score, lowest index on ties."""
    scores = np.asarray(scores)
    if scores.ndim != 2:
        raise ValueError("scores must be 2-D")
    return scores.argmax(axis=1).astype(np.int64)


def train_elm(train: LabeledDataset, config: ElmConfig | None = None) -> ElmModel:
    """Fit the classifier on a training split.

    Fits the [-1, 1] feature scaling on the split, draws the hidden
    layer, and solves for the output weights in one least-squares pass.
    A class with no training samples gets an identically zero output
    column, so it can only be predicted when every other class scores
    non-positive.
    """
    if config is None:
        config = ElmConfig()
    start = time.perf_counter()
    scaling = fit_scaling(train)
    scaled = scale_features(train.features, scaling)
    weights, biases = init_random_layer(train.n_features, config)
    hidden = build_hidden_matrix(scaled, weights, biases, config.activation)
    targets = encode_targets(train.labels, train.n_classes)
    output_weights = min_norm_lstsq(hidden, targets, rank_tol=config.rank_tol)
    elapsed = time.perf_counter() - start
    return ElmModel(
        weights=weights,
        biases=biases,
        output_weights=output_weights,
        config=config,
        class_names=train.class_names,
        scaling=scaling,
        train_time_s=elapsed,
    )


def predict_scores(model: ElmModel, features: np.ndarray) -> np.ndarray:
    """Raw class scores (samples, classes) for unscaled input features."""
    scaled = scale_features(np.asarray(features, dtype=np.float64), model.scaling)
    hidden = build_hidden_matrix(scaled, model.weights, model.biases, model.config.activation)
    return hidden @ model.output_weights


def predict(model: ElmModel, features: np.ndarray) -> np.ndarray:
    """Predicted label indices for unscaled input features."""
    return decode_scores(predict_scores(model, features))


def training_cost(model: ElmModel, train: LabeledDataset) -> float:
    """Sum of squared errors between training scores and one-hot targets."""
    scores = predict_scores(model, train.features)
    targets = encode_targets(train.labels, model.n_classes)
    return float(np.sum((scores - targets) ** 2))
