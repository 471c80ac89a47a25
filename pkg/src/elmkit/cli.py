"""Command line interface.

Subcommands:

* ``generate``  — write a synthetic scene as a labeled CSV (optionally
  pre-split into train and test files).
* ``train``     — fit a classifier on a labeled CSV, write a model file
  plus a training report next to it.
* ``predict``   — label new samples with a saved model.
* ``benchmark`` — train both classifiers on one split and write models,
  predictions, and paired reports.
* ``sweep``     — map test accuracy against hidden-layer width.

Every artifact embeds the full effective configuration (model files by
format, CSV outputs as leading ``#`` comments, reports as config lines)
and nothing embeds wall-clock state except clearly marked timing lines,
so repeated runs produce byte-identical files apart from those lines.

Exit codes: 0 success, 2 usage errors, 3 malformed input files,
4 invalid data or configuration values, 5 training divergence,
1 unexpected failure.
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

from .data import (
    ConfigFormatError,
    CsvFormatError,
    DEFAULT_TRAIN_FRACTION,
    SplitSpec,
    generate_synthetic,
    littleport_like_config,
    load_csv,
    load_feature_csv,
    load_synthetic_config,
    save_csv,
    stratified_split,
)
from .elm import ElmConfig, ElmModel, train_elm, training_cost
from .evaluate import (
    benchmark,
    config_text,
    confusion,
    dataset_fingerprint,
    model_predict,
    sweep_hidden_nodes,
)
from .linalg import LinalgError
from .mlp import MlpConfig, MlpDivergenceError, train_mlp
from .modelio import ModelFormatError, load_model, save_model

_EXIT_CODES_HELP = """\
exit codes:
  0  success
  2  usage error (bad flags or arguments)
  3  malformed input file (dataset, generator config, or model)
  4  invalid data or configuration values
  5  training diverged
  1  unexpected failure
"""


def _config_comment_lines(config) -> list[str]:
    from .data import SyntheticConfig  # local import to keep module load light

    if isinstance(config, SyntheticConfig):
        lines = [f"generator seed: {config.seed}", f"features: {config.n_features}"]
        for cls, name in enumerate(config.class_names):
            mean = " ".join(repr(float(v)) for v in config.means[cls])
            lines.append(f"class {name}: count {config.counts[cls]} mean {mean}")
        return lines
    return [config_text(config)]


def _split_outputs(base: Path) -> tuple[Path, Path]:
    return (base.with_name(base.stem + ".train" + base.suffix),
            base.with_name(base.stem + ".test" + base.suffix))


def cmd_generate(args) -> int:
    if args.config is not None:
        config = load_synthetic_config(args.config)
        if args.seed is not None:
            from dataclasses import replace

            config = replace(config, seed=args.seed)
    else:
        config = littleport_like_config(seed=args.seed if args.seed is not None else 42)
    dataset = generate_synthetic(config)
    comments = _config_comment_lines(config)
    out = Path(args.out)
    save_csv(dataset, out, header_comments=comments)
    print(f"wrote {dataset.n_samples} samples, {dataset.n_classes} classes to {out}")

    if args.train_fraction is not None:
        split_seed = args.seed if args.seed is not None else config.seed
        spec = SplitSpec(train_fraction=args.train_fraction, seed=split_seed)
        train, test = stratified_split(dataset, spec)
        split_comment = (f"split: train_fraction={repr(args.train_fraction)} "
                         f"seed={split_seed}")
        train_path, test_path = _split_outputs(out)
        save_csv(train, train_path, header_comments=comments + [split_comment])
        save_csv(test, test_path, header_comments=comments + [split_comment])
        print(f"wrote split {train.n_samples}/{test.n_samples} to "
              f"{train_path} and {test_path}")
    return 0


def _elm_config(args) -> ElmConfig:
    return ElmConfig(
        hidden_nodes=args.hidden if args.hidden is not None else 300,
        activation=args.activation,
        seed=args.seed if args.seed is not None else 0,
        rank_tol=args.rank_tol,
    )


def _mlp_config(args, hidden: int | None) -> MlpConfig:
    return MlpConfig(
        hidden_nodes=hidden if hidden is not None else 26,
        learning_rate=args.learning_rate,
        momentum=args.momentum,
        iterations=args.iterations,
        seed=args.seed if args.seed is not None else 0,
    )


def _training_report(model, dataset) -> str:
    """Summary of a completed fit: config, data, training-set quality.

    The only wall-clock content is the line containing "time", matching
    the filter convention of the benchmark reports.
    """
    predicted = model_predict(model, dataset.features)
    matrix = confusion(dataset.labels, predicted, dataset.class_names)
    if isinstance(model, ElmModel):
        cost = training_cost(model, dataset)
    else:
        cost = model.loss_history[-1]
    lines = [
        "training report",
        f"config: {config_text(model.config)}",
        f"data fingerprint: {dataset_fingerprint(dataset)}",
        f"train samples: {dataset.n_samples}",
        f"training accuracy: {100.0 * matrix.overall_accuracy():.4f}%",
        f"training cost (sum of squared errors): {repr(cost)}",
        f"train time seconds: {model.train_time_s:.6f}",
        "confusion matrix (rows actual, columns predicted):",
        matrix.render_text(),
    ]
    return "\n".join(lines) + "\n"


def cmd_train(args) -> int:
    dataset = load_csv(args.data)
    if args.classifier == "elm":
        model = train_elm(dataset, _elm_config(args))
    else:
        model = train_mlp(dataset, _mlp_config(args, args.hidden))
    save_model(model, args.out)
    report_path = Path(str(args.out) + ".report.txt")
    report_path.write_text(_training_report(model, dataset), encoding="utf-8")
    print(f"trained {args.classifier} on {dataset.n_samples} samples; "
          f"model at {args.out}, report at {report_path}")
    return 0


def _write_predictions(path, features, feature_names, labels, class_names, config_line) -> None:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(f"# {config_line}\n")
        writer = csv.writer(handle)
        writer.writerow([*feature_names, "label"])
        for row, label in zip(features, labels):
            writer.writerow([*(repr(float(v)) for v in row), class_names[label]])


def cmd_predict(args) -> int:
    model = load_model(args.model)
    features, feature_names = load_feature_csv(args.data)
    if features.shape[1] != model.n_features:
        raise ValueError(
            f"model expects {model.n_features} features, input has {features.shape[1]}"
        )
    labels = model_predict(model, features)
    _write_predictions(args.out, features, feature_names, labels,
                       model.class_names, config_text(model.config))
    print(f"wrote {len(labels)} predictions to {args.out}")
    return 0


def cmd_benchmark(args) -> int:
    dataset = load_csv(args.data)
    spec = SplitSpec(train_fraction=args.train_fraction,
                     seed=args.seed if args.seed is not None else 0)
    train, test = stratified_split(dataset, spec)
    elm_config = _elm_config(args)
    mlp_config = _mlp_config(args, args.mlp_hidden)
    result = benchmark(train, test, elm_config, mlp_config,
                       sequential_timing=args.sequential_timing)

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    save_model(result.elm_model, out_dir / "elm.model")
    save_model(result.mlp_model, out_dir / "mlp.model")
    for model, name in ((result.elm_model, "elm"), (result.mlp_model, "mlp")):
        labels = model_predict(model, test.features)
        _write_predictions(out_dir / f"{name}_predictions.csv", test.features,
                           [f"f{i + 1}" for i in range(test.n_features)],
                           labels, model.class_names, config_text(model.config))
    (out_dir / "report.txt").write_text(result.render_text() + "\n", encoding="utf-8")
    (out_dir / "report.rec").write_text(result.to_record() + "\n", encoding="utf-8")
    print(f"elm accuracy {result.elm_report.accuracy * 100:.2f}%, "
          f"mlp accuracy {result.mlp_report.accuracy * 100:.2f}%, "
          f"train speedup {result.speedup:.1f}x; artifacts in {out_dir}")
    return 0


def cmd_sweep(args) -> int:
    dataset = load_csv(args.data)
    spec = SplitSpec(train_fraction=args.train_fraction,
                     seed=args.seed if args.seed is not None else 0)
    train, test = stratified_split(dataset, spec)
    template = ElmConfig(activation=args.activation, rank_tol=args.rank_tol)
    result = sweep_hidden_nodes(train, test, config=template,
                                n_seeds=args.seeds,
                                base_seed=args.seed if args.seed is not None else 0,
                                workers=args.workers)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "sweep.txt").write_text(result.render_text() + "\n", encoding="utf-8")
    (out_dir / "sweep.rec").write_text(result.to_record() + "\n", encoding="utf-8")
    print(f"best hidden width {result.best_h} "
          f"(median accuracy {result.best_accuracy * 100:.2f}%); artifacts in {out_dir}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="elmkit",
        description="Train and compare a direct-solve classifier with an "
                    "iterative baseline on labeled feature vectors.",
        epilog=_EXIT_CODES_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a synthetic labeled CSV scene")
    gen.add_argument("--config", help="generator config file (default: bundled scene)")
    gen.add_argument("--seed", type=int, help="override the sampling (and split) seed")
    gen.add_argument("--train-fraction", type=float,
                     help="also write .train/.test files split at this fraction")
    gen.add_argument("--out", required=True, help="output CSV path")
    gen.set_defaults(handler=cmd_generate)

    def add_classifier_flags(p, with_classifier=True):
        if with_classifier:
            p.add_argument("--classifier", choices=("elm", "mlp"), default="elm",
                           help="classifier kind (default elm)")
        p.add_argument("--hidden", type=int,
                       help="hidden-layer width (default: 300 elm, 26 mlp)")
        p.add_argument("--activation", default="sigmoid",
                       choices=("sigmoid", "tanh", "hardlimit"),
                       help="elm hidden activation (default sigmoid)")
        p.add_argument("--seed", type=int, help="classifier seed (default 0)")
        p.add_argument("--learning-rate", type=float, default=0.25,
                       help="mlp learning rate (default 0.25)")
        p.add_argument("--momentum", type=float, default=0.2,
                       help="mlp momentum (default 0.2)")
        p.add_argument("--iterations", type=int, default=2200,
                       help="mlp training iterations (default 2200)")
        p.add_argument("--rank-tol", type=float, default=1e-10,
                       help="relative singular-value cutoff for the elm solve")

    train = sub.add_parser("train", help="fit a classifier on a labeled CSV")
    train.add_argument("--data", required=True, help="labeled training CSV")
    add_classifier_flags(train)
    train.add_argument("--out", required=True,
                       help="output model file (training report goes to OUT.report.txt)")
    train.set_defaults(handler=cmd_train)

    pred = sub.add_parser("predict", help="label new samples with a saved model")
    pred.add_argument("--model", required=True, help="model file from train/benchmark")
    pred.add_argument("--data", required=True, help="CSV of feature rows")
    pred.add_argument("--out", required=True, help="output predictions CSV")
    pred.set_defaults(handler=cmd_predict)

    bench = sub.add_parser("benchmark",
                           help="train both classifiers on one split and compare")
    bench.add_argument("--data", required=True, help="labeled CSV to split and use")
    bench.add_argument("--train-fraction", type=float, default=DEFAULT_TRAIN_FRACTION,
                       help="stratified train share (default matches the bundled scene)")
    add_classifier_flags(bench, with_classifier=False)
    bench.add_argument("--mlp-hidden", type=int,
                       help="baseline hidden width (default 26); --hidden sets the elm width")
    bench.add_argument("--sequential-timing", action=argparse.BooleanOptionalAction,
                       default=True,
                       help="time each classifier in isolation (default on)")
    bench.add_argument("--out", required=True, help="output directory for artifacts")
    bench.set_defaults(handler=cmd_benchmark)

    sweep = sub.add_parser("sweep", help="accuracy vs hidden-layer width")
    sweep.add_argument("--data", required=True, help="labeled CSV to split and use")
    sweep.add_argument("--train-fraction", type=float, default=DEFAULT_TRAIN_FRACTION,
                       help="stratified train share (default matches the bundled scene)")
    sweep.add_argument("--activation", default="sigmoid",
                       choices=("sigmoid", "tanh", "hardlimit"),
                       help="elm hidden activation (default sigmoid)")
    sweep.add_argument("--seed", type=int,
                       help="split seed and base classifier seed (default 0)")
    sweep.add_argument("--seeds", type=int, default=3,
                       help="classifier seeds per width (default 3)")
    sweep.add_argument("--rank-tol", type=float, default=1e-10,
                       help="relative singular-value cutoff for the elm solve")
    sweep.add_argument("--workers", type=int, default=None,
                       help="thread workers for the sweep (default: sequential)")
    sweep.add_argument("--out", required=True, help="output directory for artifacts")
    sweep.set_defaults(handler=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    command = args.command
    try:
        return args.handler(args)
    except (CsvFormatError, ConfigFormatError, ModelFormatError) as exc:
        print(f"elmkit {command}: {exc}", file=sys.stderr)
        return 3
    except MlpDivergenceError as exc:
        print(f"elmkit {command}: {exc}", file=sys.stderr)
        return 5
    except (ValueError, LinalgError) as exc:
        print(f"elmkit {command}: {exc}", file=sys.stderr)
        return 4
    except OSError as exc:
        print(f"elmkit {command}: {exc}", file=sys.stderr)
        return 1


def entry_point() -> None:
    sys.exit(main())
