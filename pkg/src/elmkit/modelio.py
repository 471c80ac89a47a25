"""Plain-text model files with exact round-trips.

Both classifiers serialize to a line-oriented format: a tag line naming
the kind and version, ``key: value`` header lines, one ``class:`` line
per class name, and matrix blocks introduced by a ``<name>:`` marker
followed by one space-separated row per line.  Floats are written with
``repr`` so loading reproduces every bit.  Informational fields
(training time, loss history) are deliberately not stored: a model file
depends only on the training inputs and config, never on the wall
clock.
"""

from __future__ import annotations

import numpy as np

from .data import ScalingParams
from .elm import ElmConfig, ElmModel
from .mlp import MlpConfig, MlpModel

ELM_TAG = "elm-model v1"
MLP_TAG = "mlp-model v1"


class ModelFormatError(ValueError):
    """A model file has an unknown tag, missing fields, or malformed blocks."""


def _fmt_vector(vec) -> str:
    return " ".join(repr(float(v)) for v in np.asarray(vec).ravel())


def _matrix_lines(name: str, matrix: np.ndarray) -> list[str]:
    lines = [f"{name}:"]
    for row in np.atleast_2d(matrix):
        lines.append(_fmt_vector(row))
    return lines


class _Reader:
    """Sequential line reader with format-error reporting."""

    def __init__(self, path, lines: list[str]):
        self.path = path
        self.lines = lines
        self.pos = 0

    def next_line(self) -> str:
        if self.pos >= len(self.lines):
            raise ModelFormatError(f"{self.path}: unexpected end of file")
        line = self.lines[self.pos]
        self.pos += 1
        return line

    def expect_key(self, key: str) -> str:
        line = self.next_line()
        prefix = f"{key}:"
        if not line.startswith(prefix):
            raise ModelFormatError(f"{self.path}: expected '{key}:', got '{line[:40]}'")
        return line[len(prefix):].strip()

    def read_vector(self, key: str, count: int) -> np.ndarray:
        text = self.expect_key(key)
        return self._parse_row(text, count)

    def read_matrix(self, key: str, rows: int, cols: int) -> np.ndarray:
        marker = self.expect_key(key)
        if marker:
            raise ModelFormatError(f"{self.path}: '{key}:' marker line must be bare")
        out = np.empty((rows, cols))
        for r in range(rows):
            out[r] = self._parse_row(self.next_line(), cols)
        return out

    def _parse_row(self, text: str, count: int) -> np.ndarray:
        tokens = text.split()
        if len(tokens) != count:
            raise ModelFormatError(
                f"{self.path}: expected {count} values on a row, got {len(tokens)}"
            )
        try:
            return np.array([float(t) for t in tokens])
        except ValueError:
            raise ModelFormatError(f"{self.path}: unparseable number in '{text[:60]}'") from None


def _scaling_lines(scaling: ScalingParams) -> list[str]:
    return [
        "scaling_min: " + _fmt_vector(scaling.feature_min),
        "scaling_max: " + _fmt_vector(scaling.feature_max),
    ]


def _elm_lines(model: ElmModel) -> list[str]:
    config = model.config
    lines = [
        ELM_TAG,
        f"hidden_nodes: {config.hidden_nodes}",
        f"activation: {config.activation}",
        f"seed: {config.seed}",
        f"weight_range: {repr(config.weight_range[0])} {repr(config.weight_range[1])}",
        f"rank_tol: {repr(config.rank_tol)}",
        f"features: {model.n_features}",
    ]
    lines += [f"class: {name}" for name in model.class_names]
    lines += _scaling_lines(model.scaling)
    lines += _matrix_lines("weights", model.weights)
    lines += ["biases: " + _fmt_vector(model.biases)]
    lines += _matrix_lines("output_weights", model.output_weights)
    return lines


def _mlp_lines(model: MlpModel) -> list[str]:
    config = model.config
    lines = [
        MLP_TAG,
        f"hidden_nodes: {config.hidden_nodes}",
        f"learning_rate: {repr(config.learning_rate)}",
        f"momentum: {repr(config.momentum)}",
        f"iterations: {config.iterations}",
        f"seed: {config.seed}",
        f"init_range: {repr(config.init_range[0])} {repr(config.init_range[1])}",
        f"divergence_factor: {repr(config.divergence_factor)}",
        f"features: {model.n_features}",
    ]
    lines += [f"class: {name}" for name in model.class_names]
    lines += _scaling_lines(model.scaling)
    lines += _matrix_lines("w_hidden", model.w_hidden)
    lines += ["b_hidden: " + _fmt_vector(model.b_hidden)]
    lines += _matrix_lines("w_out", model.w_out)
    lines += ["b_out: " + _fmt_vector(model.b_out)]
    return lines


def save_model(model, path) -> None:
    """Write a trained classifier to a text file (see module docstring)."""
    if isinstance(model, ElmModel):
        lines = _elm_lines(model)
    elif isinstance(model, MlpModel):
        lines = _mlp_lines(model)
    else:
        raise TypeError(f"cannot serialize {type(model).__name__}")
    with open(path, "w", encoding="utf-8") as handle:
        handle.write("\n".join(lines) + "\n")


def _read_classes(reader: _Reader) -> tuple[str, ...]:
    names = []
    while reader.pos < len(reader.lines) and reader.lines[reader.pos].startswith("class:"):
        names.append(reader.next_line()[len("class:"):].strip())
    if len(names) < 2:
        raise ModelFormatError(f"{reader.path}: fewer than two 'class:' lines")
    return tuple(names)


def _load_elm(reader: _Reader) -> ElmModel:
    hidden = int(reader.expect_key("hidden_nodes"))
    activation = reader.expect_key("activation")
    seed = int(reader.expect_key("seed"))
    lo, hi = (float(t) for t in reader.expect_key("weight_range").split())
    rank_tol = float(reader.expect_key("rank_tol"))
    features = int(reader.expect_key("features"))
    names = _read_classes(reader)
    scaling = ScalingParams(reader.read_vector("scaling_min", features),
                            reader.read_vector("scaling_max", features))
    weights = reader.read_matrix("weights", hidden, features)
    biases = reader.read_vector("biases", hidden)
    output_weights = reader.read_matrix("output_weights", hidden, len(names))
    config = ElmConfig(hidden_nodes=hidden, activation=activation, seed=seed,
                       weight_range=(lo, hi), rank_tol=rank_tol)
    return ElmModel(weights=weights, biases=biases, output_weights=output_weights,
                    config=config, class_names=names, scaling=scaling)


def _load_mlp(reader: _Reader) -> MlpModel:
    hidden = int(reader.expect_key("hidden_nodes"))
    learning_rate = float(reader.expect_key("learning_rate"))
    momentum = float(reader.expect_key("momentum"))
    iterations = int(reader.expect_key("iterations"))
    seed = int(reader.expect_key("seed"))
    lo, hi = (float(t) for t in reader.expect_key("init_range").split())
    divergence_factor = float(reader.expect_key("divergence_factor"))
    features = int(reader.expect_key("features"))
    names = _read_classes(reader)
    scaling = ScalingParams(reader.read_vector("scaling_min", features),
                            reader.read_vector("scaling_max", features))
    w_hidden = reader.read_matrix("w_hidden", hidden, features)
    b_hidden = reader.read_vector("b_hidden", hidden)
    w_out = reader.read_matrix("w_out", len(names), hidden)
    b_out = reader.read_vector("b_out", len(names))
    config = MlpConfig(hidden_nodes=hidden, learning_rate=learning_rate,
                       momentum=momentum, iterations=iterations, seed=seed,
                       init_range=(lo, hi), divergence_factor=divergence_factor)
    return MlpModel(w_hidden=w_hidden, b_hidden=b_hidden, w_out=w_out, b_out=b_out,
                    config=config, class_names=names, scaling=scaling)


def load_model(path):
    """Read a model file back; the tag line selects the classifier kind."""
    with open(path, "r", encoding="utf-8") as handle:
        lines = [line.rstrip("\n") for line in handle]
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ModelFormatError(f"{path}: file is empty")
    reader = _Reader(path, lines)
    tag = reader.next_line().strip()
    try:
        if tag == ELM_TAG:
            return _load_elm(reader)
        if tag == MLP_TAG:
            return _load_mlp(reader)
    except ModelFormatError:
        raise
    except (ValueError, TypeError) as exc:
        raise ModelFormatError(f"{path}: {exc}") from None
    raise ModelFormatError(f"{path}: unknown model tag '{tag}'")
