import csv
import io
import json

import pytest

from qnewton.cli import main


def run_cli(argv):
    try:
        return main(argv)
    except SystemExit as exc:
        return exc.code


def read_rows(text):
    return list(csv.DictReader(io.StringIO(text)))


# ---------------------------------------------------------------------------
# minimize
# ---------------------------------------------------------------------------

def test_minimize_rosenbrock(tmp_path, capsys):
    code = run_cli(["minimize", "--function", "rosenbrock", "--dim", "2",
                    "--x0", "0.55134554,0.75134554",
                    "--out", str(tmp_path / "trace.csv")])
    out, err = capsys.readouterr()
    assert code == 0
    row, = read_rows(out)
    assert row["termination"] == "converged"
    assert row["method"] == "nqn"
    assert "trace written to" in err
    assert (tmp_path / "trace.csv").exists()
    assert (tmp_path / "trace.json").exists()


@pytest.mark.filterwarnings("ignore::RuntimeWarning")  # 3 shifts, dim 15
def test_minimize_griewank15(tmp_path, capsys):
    code = run_cli(["minimize", "--function", "griewank",
                    "--x0", ",".join(["10"] * 15),
                    "--out", str(tmp_path / "g.csv")])
    out, _ = capsys.readouterr()
    assert code == 0
    row, = read_rows(out)
    assert row["termination"] == "converged"
    assert int(row["iterations"]) <= 20
    assert float(row["final_f"]) < 1e-12


def test_minimize_random_start_is_seeded(tmp_path, capsys):
    def fields():
        code = run_cli(["minimize", "--function", "ex13",
                        "--x0", "random:7",
                        "--out", str(tmp_path / "t.csv")])
        out, _ = capsys.readouterr()
        assert code == 0
        row, = read_rows(out)
        row.pop("wall_seconds")
        return row

    assert fields() == fields()


def test_minimize_default_out_path(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("QNEWTON_RESULTS", str(tmp_path))
    code = run_cli(["minimize", "--function", "protein:BAB", "--x0", "0.5"])
    _, err = capsys.readouterr()
    assert code == 0
    expected = tmp_path / "minimize" / "protein-BAB-nqn.csv"
    assert expected.exists()
    assert str(expected) in err


def test_minimize_list_functions(capsys):
    code = run_cli(["minimize", "--list-functions"])
    out, _ = capsys.readouterr()
    assert code == 0
    assert "rosenbrock" in out
    assert "griewank" in out


@pytest.mark.parametrize("argv", [
    ["minimize", "--function", "rosenbrock", "--dim", "2",
     "--x0", "1,2,3"],                                   # x0/dim mismatch
    ["minimize", "--function", "no-such-entry", "--x0", "1"],
    ["minimize", "--function", "ex13", "--x0", "random:banana"],
    ["minimize", "--function", "protein:BAB"],           # no registered start
    ["minimize", "--function", "ex13", "--bogus-flag"],
    ["minimize"],                                        # no function
])
def test_minimize_bad_invocations_exit_2(argv, capsys, tmp_path):
    assert run_cli(argv) == 2
    capsys.readouterr()


# ---------------------------------------------------------------------------
# compare
# ---------------------------------------------------------------------------

def test_compare_inline_markdown(tmp_path, capsys):
    code = run_cli(["compare", "--function", "ex13",
                    "--methods", "nqn,newton",
                    "--out", str(tmp_path)])
    out, _ = capsys.readouterr()
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("| method")
    assert len(lines) == 4        # header, rule, two method rows
    assert (tmp_path / "rows.csv").exists()


def test_compare_spec_file(tmp_path, capsys):
    from qnewton.harness import build_spec

    spec = build_spec(name="fromfile", objective="ex13",
                      initial_points=[[0.3, 0.4]], methods=["nqn"],
                      stop={"max_iter": 100}, out_dir=str(tmp_path / "runs"))
    doc = tmp_path / "spec.json"
    doc.write_text(spec.to_json())
    code = run_cli(["compare", "--spec", str(doc), "--format", "csv"])
    out, _ = capsys.readouterr()
    assert code == 0
    row, = read_rows(out)
    assert row["objective"] == "ex13"
    assert row["termination"] == "converged"


@pytest.mark.parametrize("argv", [
    ["compare"],                                          # nothing picked
    ["compare", "--suite", "rosenbrock2", "--function", "ex13"],
    ["compare", "--function", "ex13", "--methods", ","],
    ["compare", "--suite", "no-such-suite"],
])
def test_compare_bad_invocations_exit_2(argv, capsys):
    assert run_cli(argv) == 2
    capsys.readouterr()


# ---------------------------------------------------------------------------
# roots
# ---------------------------------------------------------------------------

def test_roots_builtin_json(capsys):
    code = run_cli(["roots", "--builtin", "g2",
                    "--x0", "4.0963223,-8.0935966"])
    out, _ = capsys.readouterr()
    assert code == 0
    doc = json.loads(out)
    assert doc["classification"] == "root-of-g"
    assert abs(abs(doc["z"][1]) - 1.0) <= 1e-8


def test_roots_negative_leading_coordinate(capsys):
    # the --x0=… form is how argparse takes a leading minus sign
    code = run_cli(["roots", "--builtin", "g3", "--x0=-0.227,1.115"])
    out, _ = capsys.readouterr()
    assert code == 0
    assert json.loads(out)["classification"] == "root-of-g"


def test_roots_poly_with_trace(tmp_path, capsys):
    code = run_cli(["roots", "--poly", "1,0,1", "--x0", "0,0.9",
                    "--out", str(tmp_path / "r.csv")])
    out, err = capsys.readouterr()
    assert code == 0
    doc = json.loads(out)
    assert doc["classification"] == "root-of-g"
    assert (tmp_path / "r.csv").exists()
    assert "trace written to" in err


@pytest.mark.parametrize("argv", [
    ["roots", "--x0", "0,1"],                             # neither source
    ["roots", "--poly", "1,0,1", "--builtin", "g2", "--x0", "0,1"],
    ["roots", "--poly", "1,0,1", "--x0", "1"],            # not re,im
    ["roots", "--poly", "zzz", "--x0", "0,1"],
])
def test_roots_bad_invocations_exit_2(argv, capsys):
    assert run_cli(argv) == 2
    capsys.readouterr()


# ---------------------------------------------------------------------------
# bench and help
# ---------------------------------------------------------------------------

def test_bench_one_suite(tmp_path, capsys):
    code = run_cli(["bench", "--suites", "rosenbrock2",
                    "--out", str(tmp_path)])
    out, _ = capsys.readouterr()
    assert code == 0
    assert out.startswith("## rosenbrock2\n")
    assert "| method" in out
    assert (tmp_path / "rosenbrock2" / "rows.csv").exists()


def test_help_shows_defaults(capsys):
    assert run_cli(["minimize", "--help"]) == 0
    out, _ = capsys.readouterr()
    assert "0,1,-1" in out
    assert run_cli(["--help"]) == 0
    out, _ = capsys.readouterr()
    assert "QNEWTON_RESULTS" in out
