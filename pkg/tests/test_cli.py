import json

import pandas as pd
import pytest

import app
from experiments.report import COLUMNS, MEANFIELD_COLUMNS
from utils.errors import NumericError


def error_line(capsys):
    line = capsys.readouterr().err.strip().splitlines()[-1]
    assert line.startswith("error: ")
    return json.loads(line[len("error: "):])


@pytest.fixture
def edge_file(tmp_path):
    path = tmp_path / "ba.txt"
    assert app.main(["--quiet", "gen-ba", "--n", "120", "--m", "2", "--seed", "4", "--out", str(path)]) == 0
    return path


def test_gen_ba_writes_edge_list(edge_file):
    lines = edge_file.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "# Nodes: 120 Edges: 237"
    assert len(lines) == 238


def test_run_writes_csv_and_records(tmp_path, edge_file, run_log):
    out = tmp_path / "out" / "run.csv"
    code = app.main(["--quiet", "run", "--network", str(edge_file), "--strategy", "dynamical",
                     "--beta", "0.2", "--v", "0.1", "--seasons", "3", "--replicas", "2", "--out", str(out)])
    assert code == 0
    frame = pd.read_csv(out)
    assert list(frame.columns) == COLUMNS
    assert len(frame) == 3
    runs = json.loads(run_log.read_text(encoding="utf-8"))
    assert runs[0]["command"] == "run"
    assert runs[0]["config"]["strategy"] == "dynamical"
    assert runs[0]["outputs"][0] == str(out)


def test_run_from_config_file_with_overrides(tmp_path, run_log):
    cfg = tmp_path / "exp.cfg"
    out = tmp_path / "cfg.csv"
    cfg.write_text(f"network=ba:n=100,m=2,seed=1\nstrategy=uniform\nseasons=2\nreplicas=2\nout={out}\n",
                   encoding="utf-8")
    assert app.main(["--quiet", "run", "--config", str(cfg), "--seasons", "4"]) == 0
    frame = pd.read_csv(out)
    assert frame["season"].tolist() == [1, 2, 3, 4]
    assert set(frame["strategy"]) == {"uniform"}


def test_identical_runs_give_identical_files(tmp_path, run_log):
    outputs = []
    for name in ("a.csv", "b.csv"):
        out = tmp_path / name
        app.main(["--quiet", "run", "--network", "ba:n=100,m=2,seed=1", "--seasons", "3",
                  "--replicas", "3", "--seed", "9", "--out", str(out)])
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]


def test_missing_network_file_reports_error(tmp_path, capsys, run_log):
    code = app.main(["--quiet", "run", "--network", str(tmp_path / "absent.txt"), "--out", str(tmp_path / "x.csv")])
    assert code == 1
    assert error_line(capsys)["type"] == "FileNotFoundError"


def test_invalid_parameter_reports_error(tmp_path, capsys, run_log):
    code = app.main(["--quiet", "run", "--beta", "2", "--out", str(tmp_path / "x.csv")])
    assert code == 1
    error = error_line(capsys)
    assert error["type"] == "ConfigError"
    assert "beta" in error["message"]


def test_malformed_edge_list_reports_error(tmp_path, capsys, run_log):
    path = tmp_path / "bad.txt"
    path.write_text("1 2\n3\n", encoding="utf-8")
    assert app.main(["--quiet", "stats", "--network", str(path)]) == 1
    error = error_line(capsys)
    assert error["type"] == "EdgeListParseError"
    assert "line 2" in error["message"]


def test_threshold_command(tmp_path, run_log, capsys):
    out = tmp_path / "vc.csv"
    code = app.main(["threshold", "--network", "ba:n=500,m=2,seed=1", "--beta", "0", "--strategy", "uniform",
                     "--tol", "0.05", "--replicas", "2", "--out", str(out)])
    assert code == 0
    assert "v_c = 0.0000" in capsys.readouterr().out
    frame = pd.read_csv(out)
    assert frame["v_c"].tolist() == [0.0]


def test_stats_prints_moments_and_thresholds(capsys, run_log):
    assert app.main(["stats", "--network", "ba:n=100,m=2,seed=1"]) == 0
    out = capsys.readouterr().out
    assert "N=100" in out
    assert "<k>=3.94" in out
    assert "beta=0.1" in out and "beta=0.05" in out


def test_meanfield_from_distribution_file(tmp_path, capsys, run_log):
    dist = tmp_path / "dist.pk"
    dist.write_text("2 0.3\n5 0.5\n20 0.2\n", encoding="utf-8")
    out = tmp_path / "mf.csv"
    code = app.main(["meanfield", "--dist", str(dist), "--beta", "0.3", "--v", "0.1", "--seasons", "3",
                     "--out", str(out)])
    assert code == 0
    frame = pd.read_csv(out)
    assert frame["season"].tolist() == [1, 2, 3]
    assert frame["converged"].all()
    assert "closed-form" in capsys.readouterr().out


def test_sweep_command(tmp_path, run_log):
    out = tmp_path / "sweep.csv"
    code = app.main(["--quiet", "sweep", "--network", "ba:n=100,m=2,seed=1", "--strategy", "uniform",
                     "--betas", "0.1,0.2", "--v-grid", "0,0.5", "--seasons", "2", "--replicas", "2",
                     "--out", str(out)])
    assert code == 0
    frame = pd.read_csv(out)
    assert len(frame) == 4
    assert frame["beta"].tolist() == [0.1, 0.1, 0.2, 0.2]


def test_preset_and_history(tmp_path, capsys, run_log):
    code = app.main(["--quiet", "preset", "theory-vs-simulation", "--replicas", "2", "--seasons", "5",
                     "--out-dir", str(tmp_path / "preset")])
    assert code == 0
    frame = pd.read_csv(tmp_path / "preset" / "theory_vs_simulation.csv")
    assert frame.columns.tolist() == ["season", "r_inf_sim_mean", "r_inf_sim_stderr", "r_inf_meanfield"]
    curves = pd.read_csv(tmp_path / "preset" / "class_curves.csv")
    assert set(curves["season"]) == {1, 5}

    assert app.main(["history"]) == 0
    assert "preset theory-vs-simulation" in capsys.readouterr().out


def test_history_clear(run_log, capsys):
    assert app.main(["history", "--clear"]) == 0
    assert app.main(["history"]) == 0
    assert "No recorded runs" in capsys.readouterr().out


def test_unknown_preset_is_rejected_by_parser():
    with pytest.raises(SystemExit) as excinfo:
        app.main(["preset", "no-such-preset"])
    assert excinfo.value.code != 0


def test_run_with_i0_writes_meanfield_sidecar(tmp_path, run_log):
    finals = []
    for i0 in ("0.01", "0.05"):
        out = tmp_path / f"run_{i0}.csv"
        code = app.main(["--quiet", "run", "--network", "ba:n=100,m=2,seed=1", "--seasons", "3",
                         "--replicas", "2", "--i0", i0, "--out", str(out)])
        assert code == 0
        sidecar = tmp_path / f"run_{i0}.meanfield.csv"
        frame = pd.read_csv(sidecar)
        assert frame.columns.tolist() == MEANFIELD_COLUMNS
        assert frame["season"].tolist() == [1, 2, 3]
        runs = json.loads(run_log.read_text(encoding="utf-8"))
        assert runs[-1]["config"]["i0"] == float(i0)
        assert str(sidecar) in runs[-1]["outputs"]
        assert runs[-1]["summary"]["r_inf_meanfield_final"] == pytest.approx(frame["r_inf_meanfield"].iloc[-1])
        finals.append(frame["r_inf_meanfield"].tolist())
    assert finals[0] != finals[1]


def test_run_without_i0_skips_meanfield(tmp_path, run_log):
    out = tmp_path / "plain.csv"
    assert app.main(["--quiet", "run", "--network", "ba:n=100,m=2,seed=1", "--seasons", "2",
                     "--replicas", "2", "--out", str(out)]) == 0
    assert not (tmp_path / "plain.meanfield.csv").exists()
    runs = json.loads(run_log.read_text(encoding="utf-8"))
    assert "r_inf_meanfield_final" not in runs[-1]["summary"]


def test_preset_forwards_i0(tmp_path, run_log):
    columns = []
    for name, extra in (("default", []), ("seeded", ["--i0", "0.05"])):
        code = app.main(["--quiet", "preset", "theory-vs-simulation", "--replicas", "2", "--seasons", "2",
                         "--out-dir", str(tmp_path / name), *extra])
        assert code == 0
        frame = pd.read_csv(tmp_path / name / "theory_vs_simulation.csv")
        columns.append(frame["r_inf_meanfield"].tolist())
    assert columns[0] != columns[1]


def test_meanfield_survives_closed_form_failure(tmp_path, capsys, monkeypatch, run_log):
    def fail(*args, **kwargs):
        raise NumericError("root finder did not converge")

    monkeypatch.setattr(app, "closed_form_prevalence", fail)
    dist = tmp_path / "dist.pk"
    dist.write_text("2 0.3\n5 0.5\n20 0.2\n", encoding="utf-8")
    code = app.main(["meanfield", "--dist", str(dist), "--beta", "0.3", "--v", "0.1", "--seasons", "2"])
    assert code == 0
    out = capsys.readouterr().out
    assert "unavailable" in out
    assert "S=2: r_inf" in out


def test_threshold_reads_seasons_flag(tmp_path, run_log):
    code = app.main(["--quiet", "threshold", "--network", "ba:n=200,m=2,seed=1", "--beta", "0",
                     "--strategy", "uniform", "--seasons", "2", "--replicas", "2"])
    assert code == 0
    runs = json.loads(run_log.read_text(encoding="utf-8"))
    assert runs[-1]["config"]["seasons"] == 2


def test_threshold_defaults_to_five_seasons(tmp_path, run_log):
    code = app.main(["--quiet", "threshold", "--network", "ba:n=200,m=2,seed=1", "--beta", "0",
                     "--strategy", "uniform", "--replicas", "2"])
    assert code == 0
    runs = json.loads(run_log.read_text(encoding="utf-8"))
    assert runs[-1]["config"]["seasons"] == app.THRESHOLD_SEASONS == 5
