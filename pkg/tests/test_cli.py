import csv
import io

import pytest

from synchro import cerny, serialize_automaton
from synchro.cli import (
    EXIT_ERROR,
    EXIT_NOT_FOUND,
    EXIT_NOT_SYNCHRONIZING,
    EXIT_OK,
    main,
)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_run_cerny_cutoff_maxsize_n(capsys):
    code, out, _ = run_cli(
        capsys, "run", "--cerny", "10", "--algo", "cutoff-ibfs", "--maxsize", "n"
    )
    assert code == EXIT_OK
    assert "length: 81" in out


def test_run_cerny2_eppstein(capsys):
    code, out, _ = run_cli(capsys, "run", "--cerny", "2", "--algo", "eppstein")
    assert code == EXIT_OK
    assert "length: 1" in out


def test_run_word_flag(capsys):
    code, out, _ = run_cli(
        capsys, "run", "--cerny", "2", "--algo", "eppstein", "--word"
    )
    assert code == EXIT_OK
    assert "word: 1" in out


def test_exact_matches_unbounded_cutoff(capsys):
    def length_of(*argv):
        code, out, _ = run_cli(capsys, *argv)
        assert code == EXIT_OK
        return [l for l in out.splitlines() if l.startswith("length:")][0]

    base = ("run", "--random", "6", "2", "--seed", "7")
    exact = length_of(*base, "--algo", "exact")
    heur = length_of(*base, "--algo", "cutoff-ibfs", "--maxsize", "unbounded")
    assert exact == heur


def test_not_synchronizing_exit_code(tmp_path, capsys):
    path = tmp_path / "perm.txt"
    path.write_text("3 2\n1 2\n2 0\n0 1\n")
    code, out, _ = run_cli(capsys, "run", "--file", str(path), "--algo", "eppstein")
    assert code == EXIT_NOT_SYNCHRONIZING


def test_not_found_exit_code(capsys):
    code, _, _ = run_cli(
        capsys, "run", "--cerny", "4", "--algo", "cutoff-ibfs",
        "--maxsize", "4", "--maxlen", "3",
    )
    assert code == EXIT_NOT_FOUND


def test_parse_error_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("2 2\n3 0\n0 1\n")
    code, _, err = run_cli(capsys, "run", "--file", str(path), "--algo", "eppstein")
    assert code == EXIT_ERROR
    assert "line 2" in err


def test_file_round_trip_run(tmp_path, capsys):
    path = tmp_path / "cerny4.txt"
    path.write_text(serialize_automaton(cerny(4)))
    code, out, _ = run_cli(
        capsys, "run", "--file", str(path), "--algo", "exact"
    )
    assert code == EXIT_OK
    assert "length: 9" in out


def test_run_start_mode_and_permute(capsys):
    code, out, _ = run_cli(
        capsys, "run", "--random", "20", "2", "--seed", "3",
        "--algo", "cutoff-ibfs", "--maxsize", "5",
        "--start-mode", "high-indegree", "--permute-indegree",
    )
    assert code == EXIT_OK
    assert "length:" in out


def test_bench_writes_csv_and_summary(tmp_path, capsys):
    out_path = tmp_path / "rows.csv"
    code, out, _ = run_cli(
        capsys, "bench", "--n", "5", "--trials", "3", "--seed", "1",
        "--algos", "eppstein", "cutoff-ibfs:n", "--out", str(out_path),
    )
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out_path.read_text())))
    assert len(rows) == 6
    assert set(rows[0]) == {
        "n", "k", "trial", "seed", "algorithm", "length", "time_s", "frontier_peak"
    }
    assert "# summary" in out
    assert "mean_length" in out


def test_bench_to_stdout(capsys):
    code, out, _ = run_cli(
        capsys, "bench", "--n", "4", "--trials", "2", "--algos", "eppstein"
    )
    assert code == EXIT_OK
    assert out.startswith("n,k,trial,seed,algorithm,length,time_s,frontier_peak")
