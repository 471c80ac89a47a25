"""Accuracy evaluation, paired benchmarking, and hidden-layer sweeps.

Reports come in two renderings: a human-readable text block and a
machine-readable record of ``key=value`` lines.  Every line that depends
on the wall clock carries the token ``time`` (text) or a key starting
with ``time_`` (records), so two runs of the same experiment can be
compared byte-for-byte after dropping those lines.  Everything else,
model files and prediction outputs included, is bit-reproducible.
"""

from __future__ import annotations

import hashlib
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from .data import LabeledDataset
from .elm import ElmConfig, ElmModel, predict, train_elm
from .mlp import MlpConfig, MlpModel, mlp_predict, train_mlp

DEFAULT_HIDDEN_GRID = tuple(range(25, 451, 25))


def dataset_fingerprint(dataset: LabeledDataset) -> str:
    """Hex digest pinning a dataset's exact contents.

    Hashes the raw float64 feature bytes, the label bytes, the shape,
    and the class names, so any change to any of them changes the
    fingerprint.
    """
    digest = hashlib.sha256()
    digest.update(str(dataset.features.shape).encode())
    digest.update(dataset.features.tobytes())
    digest.update(dataset.labels.tobytes())
    digest.update("|".join(dataset.class_names).encode())
    return digest.hexdigest()


def config_text(config) -> str:
    """Canonical one-line rendering of a classifier config."""
    if isinstance(config, ElmConfig):
        return (f"classifier=elm hidden_nodes={config.hidden_nodes} "
                f"activation={config.activation} seed={config.seed} "
                f"weight_range={repr(config.weight_range[0])},{repr(config.weight_range[1])} "
                f"rank_tol={repr(config.rank_tol)}")
    if isinstance(config, MlpConfig):
        return (f"classifier=mlp hidden_nodes={config.hidden_nodes} "
                f"learning_rate={repr(config.learning_rate)} momentum={repr(config.momentum)} "
                f"iterations={config.iterations} seed={config.seed} "
                f"init_range={repr(config.init_range[0])},{repr(config.init_range[1])} "
                f"divergence_factor={repr(config.divergence_factor)}")
    raise TypeError(f"unknown config type {type(config).__name__}")


@dataclass(frozen=True)
class ConfusionMatrix:
    """Square count matrix: rows are actual classes, columns predicted."""

    counts: np.ndarray
    class_names: tuple[str, ...]

    def __post_init__(self):
        counts = np.asarray(self.counts, dtype=np.int64).copy()
        m = len(self.class_names)
        if counts.shape != (m, m):
            raise ValueError(f"counts must be {m}x{m}, got {counts.shape}")
        if (counts < 0).any():
            raise ValueError("counts must be non-negative")
        counts.setflags(write=False)
        object.__setattr__(self, "counts", counts)
        object.__setattr__(self, "class_names", tuple(str(n) for n in self.class_names))

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    def overall_accuracy(self) -> float:
        total = self.total
        if total == 0:
            raise ValueError("confusion matrix is empty")
        return float(np.trace(self.counts) / total)

    def per_class_accuracy(self) -> np.ndarray:
        """Diagonal over row sums; classes with no samples report NaN."""
        row_sums = self.counts.sum(axis=1)
        with np.errstate(invalid="ignore", divide="ignore"):
            return np.where(row_sums > 0, np.diag(self.counts) / row_sums, np.nan)

    def render_text(self) -> str:
        width = max(len(n) for n in self.class_names)
        width = max(width, 6)
        header = " " * (width + 2) + " ".join(f"{n[:width]:>{width}}" for n in self.class_names)
        lines = [header]
        for i, name in enumerate(self.class_names):
            cells = " ".join(f"{int(c):>{width}}" for c in self.counts[i])
            lines.append(f"{name[:width]:>{width}}  {cells}")
        return "\n".join(lines)


def confusion(actual, predicted, class_names) -> ConfusionMatrix:
    """Tally actual-vs-predicted label pairs into a ConfusionMatrix."""
    actual = np.asarray(actual, dtype=np.int64)
    predicted = np.asarray(predicted, dtype=np.int64)
    if actual.shape != predicted.shape or actual.ndim != 1:
        raise ValueError("actual and predicted must be matching 1-D label vectors")
    m = len(class_names)
    for name, vec in (("actual", actual), ("predicted", predicted)):
        if vec.size and (vec.min() < 0 or vec.max() >= m):
            raise ValueError(f"{name} labels out of range [0, {m})")
    counts = np.zeros((m, m), dtype=np.int64)
    np.add.at(counts, (actual, predicted), 1)
    return ConfusionMatrix(counts, tuple(class_names))


@dataclass(frozen=True)
class EvalReport:
    """One classifier's held-out evaluation, with timings kept separable."""

    classifier: str
    config: str
    train_fingerprint: str
    test_fingerprint: str
    n_train: int
    n_test: int
    accuracy: float
    confusion: ConfusionMatrix
    train_time_s: float
    predict_time_s: float

    def render_text(self) -> str:
        per_class = self.confusion.per_class_accuracy()
        lines = [
            f"classifier: {self.classifier}",
            f"config: {self.config}",
            f"train fingerprint: {self.train_fingerprint}",
            f"test fingerprint: {self.test_fingerprint}",
            f"train samples: {self.n_train}",
            f"test samples: {self.n_test}",
            f"test accuracy: {self.accuracy * 100:.4f}%",
            "confusion matrix (rows actual, columns predicted):",
            self.confusion.render_text(),
            "per-class accuracy:",
        ]
        for name, value in zip(self.confusion.class_names, per_class):
            shown = "n/a" if np.isnan(value) else f"{value * 100:.4f}%"
            lines.append(f"  {name}: {shown}")
        lines.append(f"train time seconds: {self.train_time_s:.6f}")
        lines.append(f"predict time seconds: {self.predict_time_s:.6f}")
        return "\n".join(lines)

    def to_record(self) -> str:
        lines = [
            f"classifier={self.classifier}",
            f"config={self.config}",
            f"train_fingerprint={self.train_fingerprint}",
            f"test_fingerprint={self.test_fingerprint}",
            f"n_train={self.n_train}",
            f"n_test={self.n_test}",
            f"accuracy={repr(self.accuracy)}",
        ]
        m = len(self.confusion.class_names)
        for i in range(m):
            row = ",".join(str(int(c)) for c in self.confusion.counts[i])
            lines.append(f"confusion_row_{i}={row}")
        lines.append(f"time_train_s={repr(self.train_time_s)}")
        lines.append(f"time_predict_s={repr(self.predict_time_s)}")
        return "\n".join(lines)


def _classifier_kind(model) -> str:
    if isinstance(model, ElmModel):
        return "elm"
    if isinstance(model, MlpModel):
        return "mlp"
    raise TypeError(f"unknown model type {type(model).__name__}")


def model_predict(model, features: np.ndarray) -> np.ndarray:
    """Label predictions for either classifier kind."""
    if isinstance(model, ElmModel):
        return predict(model, features)
    if isinstance(model, MlpModel):
        return mlp_predict(model, features)
    raise TypeError(f"unknown model type {type(model).__name__}")


def evaluate(model, train: LabeledDataset, test: LabeledDataset,
             train_time_s: float | None = None) -> EvalReport:
    """Score a trained model on a held-out split and build its report."""
    started = time.perf_counter()
    predicted = model_predict(model, test.features)
    predict_time = time.perf_counter() - started
    matrix = confusion(test.labels, predicted, test.class_names)
    return EvalReport(
        classifier=_classifier_kind(model),
        config=config_text(model.config),
        train_fingerprint=dataset_fingerprint(train),
        test_fingerprint=dataset_fingerprint(test),
        n_train=train.n_samples,
        n_test=test.n_samples,
        accuracy=matrix.overall_accuracy(),
        confusion=matrix,
        train_time_s=model.train_time_s if train_time_s is None else train_time_s,
        predict_time_s=predict_time,
    )


@dataclass(frozen=True)
class BenchmarkResult:
    """Paired run of both classifiers on one identical split."""

    elm_model: ElmModel
    mlp_model: MlpModel
    elm_report: EvalReport
    mlp_report: EvalReport
    speedup: float

    def render_text(self) -> str:
        lines = ["benchmark: direct-solve classifier vs momentum-descent baseline", ""]
        lines.append(self.elm_report.render_text())
        lines.append("")
        lines.append(self.mlp_report.render_text())
        lines.append("")
        gap = (self.elm_report.accuracy - self.mlp_report.accuracy) * 100
        lines.append(f"accuracy gap (elm - mlp): {gap:+.4f} points")
        lines.append(f"train time speedup (mlp/elm): {self.speedup:.2f}x")
        return "\n".join(lines)

    def to_record(self) -> str:
        gap = (self.elm_report.accuracy - self.mlp_report.accuracy) * 100
        parts = [
            "record=benchmark",
            self.elm_report.to_record(),
            self.mlp_report.to_record(),
            f"accuracy_gap_points={repr(gap)}",
            f"time_speedup={repr(self.speedup)}",
        ]
        return "\n".join(parts)


def benchmark(train: LabeledDataset, test: LabeledDataset,
              elm_config: ElmConfig | None = None,
              mlp_config: MlpConfig | None = None,
              sequential_timing: bool = True) -> BenchmarkResult:
    """Train and evaluate both classifiers on the same split.

    Both classifiers must see the identical split; the shared
    fingerprints stamped on the two reports are computed once and
    asserted equal.  With *sequential_timing* (the default) each
    classifier runs start to finish in isolation; otherwise the train
    stages run back-to-back before either predict stage, which
    interleaves memory traffic between the two timings.
    """
    elm_config = elm_config or ElmConfig()
    mlp_config = mlp_config or MlpConfig()

    if sequential_timing:
        elm_model = train_elm(train, elm_config)
        elm_report = evaluate(elm_model, train, test)
        mlp_model = train_mlp(train, mlp_config)
        mlp_report = evaluate(mlp_model, train, test)
    else:
        elm_model = train_elm(train, elm_config)
        mlp_model = train_mlp(train, mlp_config)
        elm_report = evaluate(elm_model, train, test)
        mlp_report = evaluate(mlp_model, train, test)

    if (elm_report.train_fingerprint, elm_report.test_fingerprint) != (
            mlp_report.train_fingerprint, mlp_report.test_fingerprint):
        raise AssertionError("benchmark invariant violated: classifiers saw different splits")
    speedup = mlp_model.train_time_s / elm_model.train_time_s
    return BenchmarkResult(elm_model, mlp_model, elm_report, mlp_report, speedup)


@dataclass(frozen=True)
class SweepEntry:
    """Accuracy statistics for one hidden-layer width across seeds."""

    hidden_nodes: int
    median_accuracy: float
    min_accuracy: float
    max_accuracy: float
    accuracies: tuple[float, ...]


@dataclass(frozen=True)
class SweepResult:
    """Hidden-layer width sweep; ``best_h`` is the smallest width
    achieving the highest median accuracy."""

    entries: tuple[SweepEntry, ...]
    best_h: int
    best_accuracy: float
    config: str
    train_fingerprint: str
    test_fingerprint: str
    n_seeds: int = 3
    base_seed: int = 0

    def render_text(self) -> str:
        lines = [
            "hidden-layer width sweep",
            f"config: {self.config}",
            f"seeds per width: {self.n_seeds} starting at {self.base_seed}",
            f"train fingerprint: {self.train_fingerprint}",
            f"test fingerprint: {self.test_fingerprint}",
            f"{'hidden':>6} {'median%':>9} {'min%':>9} {'max%':>9}",
        ]
        for e in self.entries:
            lines.append(f"{e.hidden_nodes:>6} {e.median_accuracy * 100:>9.4f} "
                         f"{e.min_accuracy * 100:>9.4f} {e.max_accuracy * 100:>9.4f}")
        lines.append(f"best hidden width: {self.best_h} "
                     f"(median accuracy {self.best_accuracy * 100:.4f}%)")
        return "\n".join(lines)

    def to_record(self) -> str:
        lines = [
            "record=sweep",
            f"config={self.config}",
            f"n_seeds={self.n_seeds}",
            f"base_seed={self.base_seed}",
            f"train_fingerprint={self.train_fingerprint}",
            f"test_fingerprint={self.test_fingerprint}",
        ]
        for e in self.entries:
            accs = ",".join(repr(a) for a in e.accuracies)
            lines.append(f"hidden_{e.hidden_nodes}={accs}")
        lines.append(f"best_h={self.best_h}")
        lines.append(f"best_accuracy={repr(self.best_accuracy)}")
        return "\n".join(lines)


def _sweep_point(train, test, config, hidden, seeds):
    accs = []
    for seed in seeds:
        model = train_elm(train, replace(config, hidden_nodes=hidden, seed=seed))
        predicted = predict(model, test.features)
        accs.append(float((predicted == test.labels).mean()))
    return accs


def sweep_hidden_nodes(train: LabeledDataset, test: LabeledDataset,
                       hidden_grid=DEFAULT_HIDDEN_GRID,
                       config: ElmConfig | None = None,
                       n_seeds: int = 3, base_seed: int = 0,
                       workers: int | None = None) -> SweepResult:
    """Median test accuracy of the direct-solve classifier per width.

    Each width trains ``n_seeds`` models with seeds ``base_seed + k``
    and reports median, min, and max accuracy; ``best_h`` breaks median
    ties toward the smaller width.  ``workers`` > 1 evaluates widths in
    a thread pool (the linear algebra releases the interpreter lock).
    """
    if config is None:
        config = ElmConfig()
    grid = [int(h) for h in hidden_grid]
    if not grid or any(h < 1 for h in grid):
        raise ValueError("hidden_grid must be a nonempty list of positive widths")
    if n_seeds < 1:
        raise ValueError("n_seeds must be >= 1")
    seeds = [base_seed + k for k in range(n_seeds)]

    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            all_accs = list(pool.map(
                lambda h: _sweep_point(train, test, config, h, seeds), grid))
    else:
        all_accs = [_sweep_point(train, test, config, h, seeds) for h in grid]

    entries = tuple(
        SweepEntry(
            hidden_nodes=h,
            median_accuracy=float(np.median(accs)),
            min_accuracy=min(accs),
            max_accuracy=max(accs),
            accuracies=tuple(accs),
        )
        for h, accs in zip(grid, all_accs)
    )
    best = min(entries, key=lambda e: (-e.median_accuracy, e.hidden_nodes))
    return SweepResult(
        entries=entries,
        best_h=best.hidden_nodes,
        best_accuracy=best.median_accuracy,
        config=config_text(config),
        train_fingerprint=dataset_fingerprint(train),
        test_fingerprint=dataset_fingerprint(test),
        n_seeds=n_seeds,
        base_seed=base_seed,
    )
