"""Tests for the command line interface."""

import subprocess
import sys

import numpy as np
import pytest

from elmkit.cli import main
from elmkit.data import (
    LabeledDataset,
    littleport_like_config,
    load_csv,
    save_csv,
    save_synthetic_config,
)
from elmkit.modelio import load_model


def write_blobs_csv(path, rng, n_per_class=40, spread=0.6):
    centers = np.array([[0.0, 0.0], [6.0, 0.0], [3.0, 5.0]])
    rows, labels = [], []
    for cls, center in enumerate(centers):
        rows.append(center + spread * rng.standard_normal((n_per_class, 2)))
        labels.append(np.full(n_per_class, cls))
    ds = LabeledDataset(np.vstack(rows), np.concatenate(labels), ("a", "b", "c"))
    save_csv(ds, path)
    return ds


class TestGenerate:
    def test_writes_default_scene(self, tmp_path):
        out = tmp_path / "scene.csv"
        assert main(["generate", "--out", str(out)]) == 0
        text = out.read_text()
        assert text.startswith("# generator seed: 42\n")
        ds = load_csv(out)
        assert ds.n_samples == 4737
        assert ds.n_classes == 7
        assert ds.n_features == 6

    def test_split_outputs(self, tmp_path):
        out = tmp_path / "scene.csv"
        code = main(["generate", "--out", str(out),
                     "--train-fraction", str(2700 / 4737)])
        assert code == 0
        train = load_csv(tmp_path / "scene.train.csv")
        test = load_csv(tmp_path / "scene.test.csv")
        assert train.n_samples == 2700
        assert test.n_samples == 2037

    def test_custom_config_and_seed_override(self, tmp_path):
        cfg_path = tmp_path / "scene.cfg"
        save_synthetic_config(littleport_like_config(seed=5), cfg_path)
        a = tmp_path / "a.csv"
        b = tmp_path / "b.csv"
        assert main(["generate", "--config", str(cfg_path), "--out", str(a)]) == 0
        assert main(["generate", "--config", str(cfg_path), "--seed", "6",
                     "--out", str(b)]) == 0
        assert load_csv(a).features[0, 0] != load_csv(b).features[0, 0]

    def test_deterministic_bytes(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        main(["generate", "--seed", "3", "--out", str(a)])
        main(["generate", "--seed", "3", "--out", str(b)])
        assert a.read_bytes() == b.read_bytes()

    def test_bad_config_file_exits_3(self, tmp_path):
        bad = tmp_path / "bad.cfg"
        bad.write_text("not a config\n")
        code = main(["generate", "--config", str(bad), "--out", str(tmp_path / "x.csv")])
        assert code == 3


class TestTrainPredict:
    def test_elm_round_trip(self, tmp_path, rng, capsys):
        data = tmp_path / "train.csv"
        ds = write_blobs_csv(data, rng)
        model_path = tmp_path / "elm.model"
        code = main(["train", "--data", str(data), "--classifier", "elm",
                     "--hidden", "25", "--seed", "1", "--out", str(model_path)])
        assert code == 0
        model = load_model(model_path)
        assert model.config.hidden_nodes == 25

        pred_path = tmp_path / "pred.csv"
        assert main(["predict", "--model", str(model_path), "--data", str(data),
                     "--out", str(pred_path)]) == 0
        predicted = load_csv(pred_path, class_names=ds.class_names)
        accuracy = (predicted.labels == ds.labels).mean()
        assert accuracy > 0.9
        assert pred_path.read_text().startswith("# classifier=elm")

    def test_mlp_training(self, tmp_path, rng):
        data = tmp_path / "train.csv"
        write_blobs_csv(data, rng)
        model_path = tmp_path / "mlp.model"
        code = main(["train", "--data", str(data), "--classifier", "mlp",
                     "--hidden", "8", "--iterations", "60", "--seed", "2",
                     "--out", str(model_path)])
        assert code == 0
        model = load_model(model_path)
        assert model.config.hidden_nodes == 8
        assert model.config.iterations == 60

    def test_training_report_written(self, tmp_path, rng):
        data = tmp_path / "train.csv"
        write_blobs_csv(data, rng)
        model_path = tmp_path / "elm.model"
        assert main(["train", "--data", str(data), "--hidden", "12",
                     "--out", str(model_path)]) == 0
        report = (tmp_path / "elm.model.report.txt").read_text()
        assert report.startswith("training report\n")
        assert "config: classifier=elm hidden_nodes=12" in report
        assert "train samples: 120" in report
        assert "training accuracy:" in report
        assert "confusion matrix" in report

    def test_training_report_stable_modulo_time_lines(self, tmp_path, rng):
        data = tmp_path / "train.csv"
        write_blobs_csv(data, rng)
        for name in ("a.model", "b.model"):
            main(["train", "--data", str(data), "--classifier", "mlp",
                  "--iterations", "30", "--out", str(tmp_path / name)])
        texts = []
        for name in ("a.model", "b.model"):
            lines = (tmp_path / f"{name}.report.txt").read_text().splitlines()
            texts.append([ln for ln in lines if "time" not in ln])
        assert texts[0] == texts[1]
        assert len(texts[0]) < len((tmp_path / "a.model.report.txt").read_text().splitlines())

    def test_default_hidden_depends_on_classifier(self, tmp_path, rng):
        data = tmp_path / "train.csv"
        write_blobs_csv(data, rng)
        elm_path = tmp_path / "e.model"
        mlp_path = tmp_path / "m.model"
        main(["train", "--data", str(data), "--out", str(elm_path)])
        main(["train", "--data", str(data), "--classifier", "mlp",
              "--iterations", "5", "--out", str(mlp_path)])
        assert load_model(elm_path).config.hidden_nodes == 300
        assert load_model(mlp_path).config.hidden_nodes == 26

    def test_feature_width_mismatch_exits_4(self, tmp_path, rng):
        data = tmp_path / "train.csv"
        write_blobs_csv(data, rng)
        model_path = tmp_path / "elm.model"
        main(["train", "--data", str(data), "--hidden", "10", "--out", str(model_path)])
        wide = tmp_path / "wide.csv"
        wide.write_text("f1,f2,f3\n1.0,2.0,3.0\n")
        code = main(["predict", "--model", str(model_path), "--data", str(wide),
                     "--out", str(tmp_path / "p.csv")])
        assert code == 4

    def test_corrupt_model_exits_3(self, tmp_path, rng):
        data = tmp_path / "train.csv"
        write_blobs_csv(data, rng)
        bad = tmp_path / "bad.model"
        bad.write_text("gibberish v0\n")
        code = main(["predict", "--model", str(bad), "--data", str(data),
                     "--out", str(tmp_path / "p.csv")])
        assert code == 3

    def test_corrupt_csv_exits_3(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("f1,label\noops,a\n")
        code = main(["train", "--data", str(bad), "--out", str(tmp_path / "m.model")])
        assert code == 3

    def test_bad_flag_value_exits_4(self, tmp_path, rng):
        data = tmp_path / "train.csv"
        write_blobs_csv(data, rng)
        code = main(["train", "--data", str(data), "--hidden", "0",
                     "--out", str(tmp_path / "m.model")])
        assert code == 4


class TestBenchmarkCommand:
    def test_artifacts_and_stability(self, tmp_path, rng):
        data = tmp_path / "scene.csv"
        write_blobs_csv(data, rng, n_per_class=60)
        args = ["benchmark", "--data", str(data), "--train-fraction", "0.5",
                "--seed", "1", "--hidden", "20", "--mlp-hidden", "8",
                "--iterations", "40"]
        out_a, out_b = tmp_path / "run_a", tmp_path / "run_b"
        assert main(args + ["--out", str(out_a)]) == 0
        assert main(args + ["--out", str(out_b)]) == 0

        expected = ["elm.model", "mlp.model", "elm_predictions.csv",
                    "mlp_predictions.csv", "report.txt", "report.rec"]
        for name in expected:
            assert (out_a / name).is_file(), name

        # repeated runs agree byte for byte once timing lines are dropped
        for name in expected:
            a_text = (out_a / name).read_text().splitlines()
            b_text = (out_b / name).read_text().splitlines()
            a_stable = [l for l in a_text if "time" not in l]
            b_stable = [l for l in b_text if "time" not in l]
            assert a_stable == b_stable, name
        assert (out_a / "elm.model").read_bytes() == (out_b / "elm.model").read_bytes()
        assert (out_a / "mlp.model").read_bytes() == (out_b / "mlp.model").read_bytes()

    def test_elm_hidden_flag_does_not_touch_mlp(self, tmp_path, rng):
        data = tmp_path / "scene.csv"
        write_blobs_csv(data, rng, n_per_class=30)
        out = tmp_path / "run"
        main(["benchmark", "--data", str(data), "--train-fraction", "0.5",
              "--hidden", "33", "--iterations", "5", "--out", str(out)])
        assert load_model(out / "elm.model").config.hidden_nodes == 33
        assert load_model(out / "mlp.model").config.hidden_nodes == 26

    def test_report_embeds_configs(self, tmp_path, rng):
        data = tmp_path / "scene.csv"
        write_blobs_csv(data, rng, n_per_class=30)
        out = tmp_path / "run"
        main(["benchmark", "--data", str(data), "--train-fraction", "0.5",
              "--hidden", "15", "--iterations", "5", "--out", str(out)])
        report = (out / "report.txt").read_text()
        assert "classifier=elm hidden_nodes=15" in report
        assert "classifier=mlp hidden_nodes=26" in report
        assert "train fingerprint: " in report


class TestSweepCommand:
    def test_sweep_artifacts(self, tmp_path, rng):
        data = tmp_path / "scene.csv"
        write_blobs_csv(data, rng, n_per_class=40)
        out = tmp_path / "sweep"
        code = main(["sweep", "--data", str(data), "--train-fraction", "0.5",
                     "--seed", "2", "--seeds", "2", "--out", str(out)])
        assert code == 0
        text = (out / "sweep.txt").read_text()
        assert "best hidden width" in text
        rec = (out / "sweep.rec").read_text()
        assert "record=sweep" in rec
        assert "best_h=" in rec
        assert "base_seed=2" in rec


class TestEntryPoints:
    def test_module_invocation(self, tmp_path):
        out = tmp_path / "scene.csv"
        proc = subprocess.run(
            [sys.executable, "-m", "elmkit", "generate", "--out", str(out)],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert out.is_file()

    def test_usage_error_exits_2(self):
        proc = subprocess.run(
            [sys.executable, "-m", "elmkit", "train", "--nonsense"],
            capture_output=True, text=True)
        assert proc.returncode == 2

    def test_missing_subcommand_exits_2(self):
        proc = subprocess.run([sys.executable, "-m", "elmkit"],
                              capture_output=True, text=True)
        assert proc.returncode == 2

    def test_error_diagnostic_is_single_stderr_line(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("f1,label\noops,a\n")
        proc = subprocess.run(
            [sys.executable, "-m", "elmkit", "train", "--data", str(bad),
             "--out", str(tmp_path / "m.model")],
            capture_output=True, text=True)
        assert proc.returncode == 3
        lines = [l for l in proc.stderr.splitlines() if l.strip()]
        assert len(lines) == 1
        assert lines[0].startswith("elmkit train: ")

    def test_help_documents_exit_codes(self):
        proc = subprocess.run([sys.executable, "-m", "elmkit", "--help"],
                              capture_output=True, text=True)
        assert proc.returncode == 0
        assert "exit codes" in proc.stdout
        for code in ("0", "2", "3", "4", "5"):
            assert code in proc.stdout
