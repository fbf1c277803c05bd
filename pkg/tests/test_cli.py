"""End-to-end runs of the command line, in process."""

import json
from pathlib import Path

import pytest

from bishops.cli import main

from helpers import DATA_DIR

FIXTURE = str(DATA_DIR / "clique_example.txt")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_single_board(capsys):
    code, out, err = run(capsys, "count", "-q", "2", "-n", "3")
    assert code == 0
    assert out.strip() == "26"
    assert err == ""


def test_count_range_pretty(capsys):
    code, out, _ = run(capsys, "count", "-q", "2", "--n-range", "2..4")
    assert code == 0
    assert out.splitlines() == ["n=2: 4", "n=3: 26", "n=4: 92"]


def test_count_csv(capsys):
    code, out, _ = run(capsys, "count", "-q", "2", "--n-range", "2..3",
                       "--format", "csv")
    assert code == 0
    assert out == "n,count\r\n2,4\r\n3,26\r\n"


def test_count_json(capsys):
    code, out, _ = run(capsys, "count", "-q", "2", "-n", "3",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["counts"] == {"3": "26"}
    assert payload["method"] == "fast"


def test_count_naive_method(capsys):
    code, out, _ = run(capsys, "count", "-q", "2", "-n", "3",
                       "--method", "naive")
    assert code == 0
    assert out.strip() == "26"


def test_count_other_rider(capsys):
    code, out, _ = run(capsys, "count", "--piece", "1,0;0,1",
                       "-q", "2", "-n", "3")
    assert code == 0
    assert out.strip() == "18"


def test_count_requires_exactly_one_board_size(capsys):
    code, _, err = run(capsys, "count", "-q", "2")
    assert code == 2
    assert "exactly one" in err
    code, _, err = run(capsys, "count", "-q", "2", "-n", "3",
                       "--n-range", "2..4")
    assert code == 2


def test_count_bad_range(capsys):
    code, _, err = run(capsys, "count", "-q", "2", "--n-range", "5..2")
    assert code == 2
    assert "error:" in err


def test_count_fast_rejects_other_riders(capsys):
    code, _, err = run(capsys, "count", "--piece", "1,0", "-q", "1",
                       "-n", "3", "--method", "fast")
    assert code == 2
    assert "bishop" in err


def test_count_budget_exceeded(capsys):
    code, _, err = run(capsys, "count", "-q", "3", "-n", "6",
                       "--method", "naive", "--budget", "4")
    assert code == 2
    assert "budget" in err


def test_interpolate_pretty(capsys):
    code, out, _ = run(capsys, "interpolate", "-q", "2")
    assert code == 0
    assert "minimized period 1" in out
    assert "holdout n=9..12: PASS" in out


def test_interpolate_json(capsys):
    code, out, _ = run(capsys, "interpolate", "-q", "3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["minimized_period"] == 2
    assert payload["holdout"]["pass"] is True
    assert payload["holdout"]["range"] == [13, 16]
    assert payload["quasipolynomial"]["constituents"][1][-1] == "1/4"
    assert payload["coefficient_periods"] == [1, 1, 1, 1, 1, 1, 2]


def test_interpolate_rejects_bad_q(capsys):
    code, _, err = run(capsys, "interpolate", "-q", "0")
    assert code == 2
    assert "error:" in err


def test_verify_period(capsys):
    for q, lcm_text in ((1, "1"), (2, "1"), (3, "2")):
        code, out, _ = run(capsys, "verify-period", "-q", str(q))
        assert code == 0, q
        assert f"geometric denominator lcm: {lcm_text}" in out
        assert "PASS" in out


def test_verify_period_bound(capsys):
    code, _, err = run(capsys, "verify-period", "-q", "4")
    assert code == 2
    assert "bound" in err


def test_vertices_pretty(capsys):
    code, out, _ = run(capsys, "vertices", "-q", "2")
    assert code == 0
    assert "16 vertices" in out
    assert "half-integrality: PASS" in out


def test_vertices_json(capsys):
    code, out, _ = run(capsys, "vertices", "-q", "1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 4
    assert payload["half_integral"] is True
    assert payload["denominator_lcm"] == 1
    assert len(payload["vertices"]) == 4
    assert payload["vertices"][0]["point"] == ["0/1", "0/1"]


def test_graph_pretty(capsys):
    code, out, _ = run(capsys, "graph", FIXTURE)
    assert code == 0
    assert "positive cliques: [[1, 2], [3, 4, 5], [6, 7]]" in out
    assert "negative cliques: [[1, 3], [2, 4], [5, 6], [7]]" in out
    assert "solution point: (1, -1, 0, 0, 1, -1, 0, 0, -1, 1, -1/2, 3/2, 1, 0)" in out


def test_graph_json(capsys):
    code, out, _ = run(capsys, "graph", FIXTURE, "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["q"] == 7
    assert payload["rank"] == 6
    assert payload["cyclomatic"] == 1
    assert payload["negative_one_forest"] is False
    assert payload["solution"]["point"][10] == "-1/2"
    assert payload["solution"]["point"][11] == "3/2"


def test_graph_without_fixations(capsys, tmp_path):
    path = tmp_path / "plain.txt"
    path.write_text("2\n1 2 +\n")
    code, out, _ = run(capsys, "graph", str(path))
    assert code == 0
    assert "solution" not in out


def test_graph_missing_file(capsys):
    code, _, err = run(capsys, "graph", "no_such_file.txt")
    assert code == 2
    assert "error:" in err


def test_graph_parse_error(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("2\n1 2 *\n")
    code, _, err = run(capsys, "graph", str(path))
    assert code == 2
    assert "line 2" in err


def test_graph_singular_fixations(capsys, tmp_path):
    path = tmp_path / "singular.txt"
    path.write_text("2\n1 2 +\nfix x_1 = 0\nfix x_2 = 0\n")
    code, _, err = run(capsys, "graph", str(path))
    assert code == 2
    assert "1-forest" in err


def test_check_runs_green(capsys):
    code, out, _ = run(capsys, "check", "--seed", "5", "--spot", "2",
                       "--graphs", "30", "--matrices", "20", "--solves", "20")
    assert code == 0
    assert out.count(": ok") == 4


def test_check_is_deterministic_for_a_seed(capsys):
    first = run(capsys, "check", "--seed", "9", "--spot", "1",
                "--graphs", "10", "--matrices", "5", "--solves", "5")
    second = run(capsys, "check", "--seed", "9", "--spot", "1",
                 "--graphs", "10", "--matrices", "5", "--solves", "5")
    assert first == second


def test_missing_subcommand_exits_via_argparse(capsys):
    with pytest.raises(SystemExit):
        main([])
    with pytest.raises(SystemExit):
        main(["count", "--method", "guess", "-q", "1", "-n", "1"])
