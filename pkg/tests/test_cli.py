from __future__ import annotations

import json
import math

import numpy as np
import pytest

from scalelaw.cli import load_fit, main
from scalelaw.data import load_dataset
from scalelaw.forms import flatten_params

FAST = ["--seeds", "1", "--max-steps", "60", "--n-grid", "1", "--s-grid", "1", "--lambda-grid", "0"]


def _fit(tmp_path, name="out", extra=()):
    out = tmp_path / name
    code = main(["fit", "--fixture", "downstream_imagenet", "--split-half", *FAST, "--out", str(out), *extra])
    assert code == 0
    return out


def test_fit_writes_artifacts(tmp_path, capsys):
    out = _fit(tmp_path)
    assert "test RMSLE" in capsys.readouterr().out
    doc = json.loads((out / "fit.json").read_text())
    assert doc["form"]["form_kind"] == "unsl" and doc["hyperparameters"]["n"] == 1
    assert (out / "plot" / "points.tsv").is_file()
    index = (out / "plot" / "slices.tsv").read_text().splitlines()
    assert len(index) > 1 and (out / "plot" / index[1].split("\t")[0]).is_file()
    roles = {line.split("\t")[-2] for line in (out / "plot" / "points.tsv").read_text().splitlines()[1:]}
    assert roles == {"train", "test"}


def test_rerun_is_byte_identical_and_numbers_round_trip(tmp_path):
    a, b = _fit(tmp_path, "a"), _fit(tmp_path, "b")
    assert (a / "fit.json").read_bytes() == (b / "fit.json").read_bytes()
    assert (a / "plot" / "points.tsv").read_bytes() == (b / "plot" / "points.tsv").read_bytes()
    spec, params, doc = load_fit(a / "fit.json")
    values = [v for v in doc["parameters"]["values"] if not isinstance(v, str)]
    back = [v for v in flatten_params(spec, params) if math.isfinite(v)]
    assert back == values


def test_predict_from_fit(tmp_path, capsys):
    out = _fit(tmp_path)
    capsys.readouterr()
    assert main(["predict", "--fit", str(out / "fit.json"), "--x", "1000,1e6", "--x", "2000,1e7"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 3 and lines[0].endswith("y_pred")
    assert all(float(line.split("\t")[-1]) > 0 for line in lines[1:])
    tsv = tmp_path / "pred.tsv"
    assert main(["predict", "--fit", str(out / "fit.json"), "--fixture", "downstream_imagenet", "--out", str(tsv)]) == 0
    rows = tsv.read_text().splitlines()
    assert rows[0].split("\t")[-2:] == ["y_pred", "y"]


def test_missing_data_file_is_a_usage_error(tmp_path, capsys):
    assert main(["fit", "--data", str(tmp_path / "missing.csv"), "--out", str(tmp_path / "o")]) == 2
    assert "not found" in capsys.readouterr().err


def test_cf_on_three_inputs_is_a_usage_error(tmp_path, capsys):
    csv = tmp_path / "d.csv"
    csv.write_text("a,b,c,y\n1,1,1,0.5\n2,2,3,0.4\n4,4,8,0.3\n")
    assert main(["fit", "--data", str(csv), "--form", "cf", *FAST, "--out", str(tmp_path / "o")]) == 2
    assert "--input-map" in capsys.readouterr().err


@pytest.mark.parametrize("body", ["{not json", json.dumps({"schema": "other"}), json.dumps({"schema": "scalelaw.fit/1"})])
def test_malformed_fit_artifact_is_a_usage_error(tmp_path, body):
    p = tmp_path / "fit.json"
    p.write_text(body)
    assert main(["predict", "--fit", str(p), "--x", "1,2"]) == 2


def test_compare_single_form_and_omit_timing(tmp_path, capsys):
    rows = []
    for name in ("a", "b"):
        out = tmp_path / name
        args = ["compare", "--fixture", "downstream_imagenet", "--forms", "a1", *FAST, "--out", str(out), "--omit-timing"]
        assert main(args) == 0
        rows.append((out / "compare.tsv").read_bytes())
    assert rows[0] == rows[1]
    lines = rows[0].decode().splitlines()
    assert len(lines) == 2 and lines[1].startswith("a1")
    assert main(["compare", "--fixture", "downstream_imagenet", "--forms", "bogus", *FAST]) == 2


def test_compute_optimal_symmetric_cf(capsys):
    code = main(["compute-optimal", "--cf", "0.1,5,0.3,5,0.3", "--compute", "1e20", "--compute-dims", "0,1"])
    assert code == 0
    out = dict(line.split("\t") for line in capsys.readouterr().out.splitlines())
    target = math.sqrt(1e20 / 6)
    assert float(out["x1"]) == pytest.approx(target, rel=1e-8)
    assert float(out["x2"]) == pytest.approx(target, rel=1e-8)
    assert float(out["constraint_residual"]) <= 1e-10


def test_simulate_then_load_then_fit(tmp_path):
    csv = tmp_path / "sim.csv"
    code = main(["simulate", "--cf", "0.1,5,0.3,8,0.4", "--grid", "1:1e4:9", "--grid", "1:1e4:9", "--out", str(csv)])
    assert code == 0
    ds = load_dataset(csv)
    assert len(ds) == 81 and ds.arity == 2
    np.testing.assert_allclose(ds.y, 0.1 + 5 * ds.x[:, 0] ** -0.3 + 8 * ds.x[:, 1] ** -0.4, rtol=1e-12)
    out = tmp_path / "fit"
    args = ["fit", "--data", str(csv), "--form", "cf", "--seeds", "2", "--max-steps", "2000", "--out", str(out)]
    assert main(args) == 0
    doc = json.loads((out / "fit.json").read_text())
    assert doc["metrics"]["test_rmsle"] <= 1e-3


def test_bad_grid_and_missing_source_are_usage_errors(tmp_path):
    assert main(["simulate", "--cf", "0.1,5,0.3,8,0.4", "--grid", "1:10", "--grid", "1:10:3", "--out", str(tmp_path / "s.csv")]) == 2
    assert main(["simulate", "--cf", "0.1,5,0.3,8,0.4", "--grid", "1:10:3", "--out", str(tmp_path / "s.csv")]) == 2
    assert main(["compute-optimal", "--cf=-1,5,0.3,8,0.4", "--compute", "1e10", "--compute-dims", "0,1"]) == 2
