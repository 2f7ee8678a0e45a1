import csv
import json

import numpy as np
import pytest

from qwalk.cli import EXIT_INVALID, EXIT_IO, EXIT_OK, main
from qwalk.optical import circuit_unitary, load_circuit
from oracles import REFERENCE_U3


def read_csv(path):
    with open(path) as fh:
        rows = list(csv.reader(fh))
    return rows[0], rows[1:]


def test_simulate_two_positions(tmp_path):
    assert main(["simulate", "--size", "2", "--delta", "0.5", "--steps", "8", "--out", str(tmp_path)]) == EXIT_OK
    header, rows = read_csv(tmp_path / "series.csv")
    assert header == ["t", "E", "E_max"]
    np.testing.assert_allclose([float(r[1]) for r in rows], [0, 1, 2, 1, 0, 1, 2, 1, 0], atol=1e-12)
    man = json.loads((tmp_path / "manifest.json").read_text())
    assert man["config"]["t_max"] == 8 and man["results"]["initial_state"] == {"position": 1, "coin": 1}
    header, rows = read_csv(tmp_path / "heatmap.csv")
    assert header == ["t", "position", "probability"] and len(rows) == 18


def test_simulate_pauli_x(tmp_path):
    assert main(["simulate", "--size", "5", "--delta", "0", "--steps", "30", "--out", str(tmp_path)]) == EXIT_OK
    _, rows = read_csv(tmp_path / "series.csv")
    assert all(float(r[1]) == 0 for r in rows)


def test_simulate_zero_steps_and_amplitudes(tmp_path):
    assert main(["simulate", "--size", "3", "--steps", "0", "--amplitudes", "--out", str(tmp_path)]) == EXIT_OK
    _, rows = read_csv(tmp_path / "series.csv")
    assert len(rows) == 1
    header, amps = read_csv(tmp_path / "amplitudes.csv")
    assert header == ["t", "x", "c", "re", "im", "prob"] and len(amps) == 9


def test_deterministic_outputs(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"graph": {"line": 4}, "coin": {"type": "hadamard", "delta": 0.3}, "t_max": 25}))
    for out in (a, b):
        assert main(["simulate", "--config", str(cfg), "--out", str(out)]) == EXIT_OK
    for name in ("series.csv", "heatmap.csv"):
        assert (a / name).read_bytes() == (b / name).read_bytes()
    ma = json.loads((a / "manifest.json").read_text())
    mb = json.loads((b / "manifest.json").read_text())
    ma["config"].pop("out"), mb["config"].pop("out")
    assert ma == mb


def test_manifest_reruns(tmp_path):
    assert main(["spectrum", "--size", "4", "--out", str(tmp_path / "a")]) == EXIT_OK
    cfg = json.loads((tmp_path / "a" / "manifest.json").read_text())["config"]
    cfg["out"] = str(tmp_path / "b")
    (tmp_path / "cfg.json").write_text(json.dumps(cfg))
    assert main(["spectrum", "--config", str(tmp_path / "cfg.json")]) == EXIT_OK
    assert (tmp_path / "a" / "spectrum.json").read_bytes() == (tmp_path / "b" / "spectrum.json").read_bytes()


@pytest.mark.parametrize("size,cls", [(2, "Periodic"), (5, "QuasiPeriodic")])
def test_spectrum(tmp_path, size, cls):
    assert main(["spectrum", "--size", str(size), "--out", str(tmp_path)]) == EXIT_OK
    doc = json.loads((tmp_path / "spectrum.json").read_text())
    assert doc["classification"] == cls
    header, rows = read_csv(tmp_path / "eigenvalues.csv")
    assert header == ["re", "im"] and len(rows) == size * size


def test_spectrum_identity_coin(tmp_path):
    eye = [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]
    cfg = {"graph": {"line": 3}, "coin": {"type": "explicit", "matrices": {str(x): eye for x in (1, 2, 3)}}}
    (tmp_path / "c.json").write_text(json.dumps(cfg))
    assert main(["spectrum", "--config", str(tmp_path / "c.json"), "--out", str(tmp_path)]) == EXIT_OK
    doc = json.loads((tmp_path / "spectrum.json").read_text())
    assert doc["classification"] == "Periodic" and doc["predicted_period"] <= 6


def test_sensitivity(tmp_path):
    args = ["sensitivity", "--size", "5", "--steps", "200", "--out", str(tmp_path)]
    assert main(args + ["--delta-a", "0.5", "--delta-b", "0.51"]) == EXIT_OK
    header, rows = read_csv(tmp_path / "sensitivity.csv")
    assert header == ["t", "E_a", "E_b", "abs_diff"]
    assert max(float(r[3]) for r in rows) > 0.1
    assert main(args + ["--delta-a", "0.5", "--delta-b", "0.5"]) == EXIT_OK
    _, rows = read_csv(tmp_path / "sensitivity.csv")
    assert all(float(r[3]) == 0 for r in rows)
    assert main(args + ["--delta-a", "0", "--delta-b", "0"]) == EXIT_OK
    _, rows = read_csv(tmp_path / "sensitivity.csv")
    assert all(float(r[1]) == float(r[2]) == 0 for r in rows)


def test_sensitivity_requires_deltas(tmp_path):
    assert main(["sensitivity", "--size", "5", "--out", str(tmp_path)]) == EXIT_INVALID


def test_two_walker(tmp_path):
    assert main(["two-walker", "--size", "5", "--steps", "40", "--out", str(tmp_path)]) == EXIT_OK
    header, rows = read_csv(tmp_path / "comparison.csv")
    assert header == ["t", "E_one", "E_two"]
    one = [float(r[1]) for r in rows]
    two = [float(r[2]) for r in rows]
    assert np.ptp(one) > 0 and np.ptp(two) > 0
    man = json.loads((tmp_path / "manifest.json").read_text())
    assert man["results"]["two_photon_modes"] == [12, 14]
    header, _ = read_csv(tmp_path / "two_walker.csv")
    assert header == ["t", "E_meyer_wallach"]


def test_two_walker_identity_coin_and_bunched(tmp_path):
    eye = [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]
    cfg = {"graph": {"line": 3}, "coin": {"type": "explicit", "matrices": {str(x): eye for x in (1, 2, 3)}}, "t_max": 12}
    (tmp_path / "c.json").write_text(json.dumps(cfg))
    assert main(["two-walker", "--config", str(tmp_path / "c.json"), "--out", str(tmp_path)]) == EXIT_OK
    _, rows = read_csv(tmp_path / "comparison.csv")
    assert len({r[1] for r in rows}) == 1 and len({r[2] for r in rows}) == 1
    assert main(["two-walker", "--size", "3", "--modes", "4", "4", "--steps", "5", "--out", str(tmp_path)]) == EXIT_OK


def test_export_circuit(tmp_path):
    assert main(["export-circuit", "--size", "3", "--delta", "0.5", "--out", str(tmp_path)]) == EXIT_OK
    circ = load_circuit((tmp_path / "circuit.json").read_text())
    assert circ.n_modes == 9
    np.testing.assert_allclose(circuit_unitary(circ).matrix, REFERENCE_U3, atol=1e-12)
    man = json.loads((tmp_path / "manifest.json").read_text())
    assert man["results"]["max_deviation"] < 1e-12


@pytest.mark.parametrize(
    "argv",
    [
        ["export-circuit", "--delta", "1.5"],
        ["simulate", "--size", "1"],
        ["simulate", "--steps", "-3"],
        ["simulate", "--size", "3", "--start", "4", "1"],
        ["two-walker", "--size", "2", "--modes", "1", "9"],
    ],
)
def test_validation_errors(tmp_path, argv, capsys):
    assert main(argv + ["--out", str(tmp_path)]) == EXIT_INVALID
    assert "invalid configuration" in capsys.readouterr().err


def test_config_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"grahp": {"line": 3}}))
    assert main(["simulate", "--config", str(bad)]) == EXIT_INVALID
    bad.write_text("{not json")
    assert main(["simulate", "--config", str(bad)]) == EXIT_INVALID
    bad.write_text(json.dumps({"graph": {"n_vertices": 3, "neighborhoods": [[1, 2], [1], [2, 3]]}}))
    assert main(["simulate", "--config", str(bad)]) == EXIT_INVALID


def test_io_errors(tmp_path):
    assert main(["simulate", "--config", str(tmp_path / "missing.json")]) == EXIT_IO
    blocker = tmp_path / "file"
    blocker.write_text("x")
    assert main(["simulate", "--size", "2", "--steps", "1", "--out", str(blocker / "sub")]) == EXIT_IO


def test_custom_graph_config(tmp_path):
    cfg = {"graph": {"n_vertices": 3, "neighborhoods": [[2, 3], [1, 3], [1, 2]]}, "t_max": 10}
    (tmp_path / "c.json").write_text(json.dumps(cfg))
    assert main(["simulate", "--config", str(tmp_path / "c.json"), "--out", str(tmp_path)]) == EXIT_OK
