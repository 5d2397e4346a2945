import csv
import io
import json
import math

import pytest
import vertexwork.cli.commands as commands
from vertexwork.cli import main
from vertexwork.exceptions import BracketError
from vertexwork.lattice import LatticeParams, SpectralDiagram, build_diagram

SWEEP = ["--ell", "1", "--e-min", "-5", "--e-max", "10", "--t-steps", "3"]


def _run(capsys, argv):
    assert main(argv) == 0
    return capsys.readouterr().out


def _table(text):
    rows = list(csv.reader(io.StringIO(text)))
    return rows[0], rows[1:]


def _column(header, rows, name):
    return [float(row[header.index(name)]) for row in rows]


def test_coupling(capsys):
    header, rows = _table(_run(capsys, ["coupling", "--n", "4", "--alpha", "0", "--t", "1"]))
    assert header[0] == "index" and len(rows) == 4
    assert _column(header, rows, "generator_re") == pytest.approx([0.0, 1.0, 0.0, 0.0], abs=1e-12)
    assert "unitarity_residual" not in header

    header, rows = _table(_run(capsys, ["coupling", "--n", "4", "--alpha", "0", "--t", "0"]))
    assert _column(header, rows, "generator_re") == pytest.approx([-0.5, 0.5, 0.5, 0.5], abs=1e-12)
    assert {row[header.index("permutation_invariant")] for row in rows} == {"true"}

    payload = json.loads(_run(capsys, ["coupling", "--t", "0.3", "--format", "json"]))
    assert payload["command"] == "coupling" and payload["params"]["t"] == 0.3
    assert len(payload["rows"]) == 4
    assert payload["summary"]["unitarity_residual"] <= 1e-12

    for t in ("1e-8", "0.99999999"):
        payload = json.loads(_run(capsys, ["coupling", "--alpha", "1", "--t", t, "--format", "json"]))
        assert payload["summary"]["unitarity_residual"] <= 1e-12
        assert main(["star", "--n", "5", "--alpha", "-1", "--t", t]) == 0
        capsys.readouterr()


def test_star(capsys):
    header, rows = _table(_run(capsys, ["star", "--n", "4", "--alpha", "-4", "--t", "0"]))
    assert header == ["branch", "kappa", "energy", "multiplicity", "oracle_residual"]
    assert _column(header, rows, "energy") == pytest.approx([-1.0])

    header, rows = _table(_run(capsys, ["star", "--n", "2", "--alpha", "0", "--t", "0.5"]))
    assert rows == []


def test_smatrix(capsys):
    header, rows = _table(_run(capsys, ["smatrix", "--n", "4", "--t", "0.5", "--limit"]))
    assert {row[0] for row in rows} == {"inf"}
    assert _column(header, rows, "generator_re") == pytest.approx([0.5, 0.5, -0.5, 0.5], abs=1e-12)

    header, rows = _table(_run(capsys, ["smatrix", "--k", "0.5", "--k", "2"]))
    assert len(rows) == 8
    assert max(_column(header, rows, "unitarity_residual")) <= 1e-12


def test_exit_codes(capsys, monkeypatch):
    assert main(["coupling", "--n", "1"]) == 2
    assert main(["coupling", "--t", "1.5"]) == 2
    assert main(["smatrix"]) == 2
    assert main(["bands", "--e-min", "5", "--e-max", "1"]) == 2
    with pytest.raises(SystemExit) as e:
        main(["coupling", "--format", "xml"])
    assert e.value.code == 2

    def fail(cfg):
        raise BracketError("no sign change")

    monkeypatch.setitem(commands.COMMANDS, "coupling", fail)
    assert main(["coupling"]) == 3
    capsys.readouterr()


def test_sweep(capsys, tmp_path):
    first = _run(capsys, ["sweep"] + SWEEP)
    assert first == _run(capsys, ["sweep"] + SWEEP)
    header, rows = _table(first)
    assert header == ["t", "e_lo", "e_hi", "edge_lo", "edge_hi", "kind"]
    assert {float(row[0]) for row in rows} == {0.0, 0.5, 1.0}

    out = tmp_path / "sweep.csv"
    assert main(["sweep"] + SWEEP + ["--out", str(out)]) == 0
    assert out.read_text() == first

    diagram = SpectralDiagram.from_json(_run(capsys, ["sweep", "--format", "json"] + SWEEP))
    assert diagram == build_diagram(LatticeParams(1.0, 0.0, 0.5), [0.0, 0.5, 1.0], (-5.0, 10.0))

    single = ["--ell", "1", "--e-min", "-5", "--e-max", "10"]
    sweep = _run(capsys, ["sweep", "--t-min", "0.3", "--t-max", "0.3", "--t-steps", "1"] + single)
    assert sweep == _run(capsys, ["bands", "--t", "0.3"] + single)
    assert math.isclose(float(_table(sweep)[1][0][0]), 0.3)
