import csv
import io

import numpy as np
import pytest

from bernvand.cli import main
from bernvand.experiments import ExperimentConfig, run_experiment
from bernvand.vandermonde import solve


def _rows(path):
    lines = path.read_text().splitlines()
    body = [ln for ln in lines if not ln.startswith("#")]
    return lines, list(csv.reader(io.StringIO("\n".join(body))))


def test_conditioning_csv(tmp_path):
    out = tmp_path / "conditioning.csv"
    assert main(["conditioning", "--nmax", "6", "--out", str(out)]) == 0
    _, rows = _rows(out)
    assert rows[0] == ["n", "k2LD", "ub", "k2V"]
    assert len(rows) == 7
    first = [float(v) for v in rows[1]]
    assert first[1] == pytest.approx(np.sqrt(3), abs=1e-10)
    assert first[2] == pytest.approx(2.3094011, abs=1e-7)
    assert first[3] == pytest.approx(1.0)
    assert all(float(r[2]) >= float(r[1]) for r in rows[1:])


@pytest.mark.parametrize("cmd", ["equispaced", "random"])
def test_solver_csv(tmp_path, cmd):
    out = tmp_path / f"{cmd}.csv"
    assert main([cmd, "--nmax", "20", "--seed", "5", "--out", str(out)]) == 0
    lines, rows = _rows(out)
    assert lines[0] == "# newton: not implemented (external algorithm)"
    assert rows[0][0] == "n" and len(rows[0]) == 10
    assert len(rows) == 21
    values = np.array([[float(v) for v in r] for r in rows[1:]])
    assert np.all(np.isfinite(values)) and np.all(values >= 0)
    if cmd == "equispaced":
        assert np.all(values[0, 1:] <= 1e-14)


def test_blocklu_csv(tmp_path):
    out = tmp_path / "blocklu.csv"
    assert main(["blocklu", "--nmax", "3", "--out", str(out)]) == 0
    _, rows = _rows(out)
    assert rows[0] == ["n", "2dL2err", "3dL2err", "2dMerr", "3dMerr", "2dres", "3dres"]
    assert [r[0] for r in rows[1:]] == ["1", "2", "3"]
    assert all(float(v) <= 1e-14 for v in rows[1][1:])


def test_trials_and_determinism():
    a = run_experiment(ExperimentConfig("random", n_max=6, seed=9, trials=3))
    b = run_experiment(ExperimentConfig("random", n_max=6, seed=9, trials=3))
    c = run_experiment(ExperimentConfig("random", n_max=6, seed=10, trials=3))
    assert a == b and a != c
    with pytest.raises(ValueError):
        ExperimentConfig("random", n_max=0)


def test_stdout_output(capsys):
    assert main(["conditioning", "--nmax", "2"]) == 0
    assert capsys.readouterr().out.startswith("n,k2LD,ub,k2V\n1,")


def test_solve_prints_coefficients(tmp_path, capsys):
    rhs = tmp_path / "b.txt"
    rhs.write_text("0.1 0.9\n-0.4\n0.5\n")
    assert main(["solve", "--n", "3", "--method", "bezout", "--rhs", str(rhs)]) == 0
    got = np.array([float(v) for v in capsys.readouterr().out.split()])
    want = solve("lu", np.arange(4) / 3, [0.1, 0.9, -0.4, 0.5])
    np.testing.assert_allclose(got, want, rtol=1e-12)


def test_solve_node_file(tmp_path, capsys):
    nodes = tmp_path / "x.txt"
    nodes.write_text("0.1\n0.3\n0.8\n")
    rhs = tmp_path / "b.txt"
    rhs.write_text("1 2 3")
    assert main(["solve", "--n", "2", "--method", "dft", "--nodes", str(nodes), "--rhs", str(rhs)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 3
    np.testing.assert_allclose([float(v) for v in lines], solve("lu", [0.1, 0.3, 0.8], [1, 2, 3]), rtol=1e-12)


def test_solve_usage_errors(tmp_path, capsys):
    rhs = tmp_path / "b.txt"
    rhs.write_text("1 2\nfoo\n")
    assert main(["solve", "--n", "2", "--rhs", str(rhs)]) == 2
    assert ":2:" in capsys.readouterr().err
    rhs.write_text("1 2\n")
    assert main(["solve", "--n", "2", "--rhs", str(rhs)]) == 2
    rhs.write_text("1 2 3\n")
    assert main(["solve", "--n", "2", "--method", "dft-equispaced", "--nodes", "stratified", "--rhs", str(rhs)]) == 2
    assert main(["solve", "--n", "2", "--rhs", str(tmp_path / "missing.txt")]) == 2
    with pytest.raises(SystemExit) as info:
        main(["solve", "--n", "2", "--method", "newton", "--rhs", str(rhs)])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["conditioning", "--nmax", "0"])
    assert info.value.code == 2


def test_numerical_failure_exit_code(tmp_path, monkeypatch):
    import bernvand.cli as cli
    from bernvand.validation import SingularMatrixError

    def boom(*args, **kwargs):
        raise SingularMatrixError(0)

    monkeypatch.setattr(cli, "solve", boom)
    rhs = tmp_path / "b.txt"
    rhs.write_text("1 2 3\n")
    assert main(["solve", "--n", "2", "--rhs", str(rhs)]) == 1


def test_unwritable_output(tmp_path):
    assert main(["conditioning", "--nmax", "2", "--out", str(tmp_path / "no" / "x.csv")]) == 1
