import io
import json
import subprocess
import sys

import pytest

from eqcolor.cli import format_ranges, run


def call(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_threshold():
    assert call(["threshold", "7", "7"])[:2] == (0, "p=8 d=2\n")


def test_p():
    assert call(["p", "--q", "6", "7", "7"])[:2] == (0, "p=6 d=3\n")


def test_p_infeasible():
    code, out, err = call(["p", "--q", "5", "7", "7"])
    assert code == 1 and out == ""
    assert "no equitable 5-coloring" in err


def test_color_json():
    code, out, _ = call(["color", "--r", "4", "7", "7", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc == {
        "schema": 1,
        "instance": {"sizes": [7, 7], "total": 14},
        "r": 4,
        "classes": [[4, 3], [4, 3]],
        "empty_classes": 0,
    }


def test_color_text():
    code, out, _ = call(["color", "--r", "5", "1", "1"])
    assert code == 0
    assert out == "X1 (n=1): 1\nX2 (n=1): 1\nempty classes: 3\n"


def test_color_infeasible():
    assert call(["color", "--r", "7", "7", "7"])[0] == 1


def test_spectrum_text_marks_gaps():
    code, out, _ = call(["spectrum", "--max", "14", "7", "7"])
    assert code == 0
    assert out == "feasible: 2,4,6,8-14; infeasible: 1,3,5,7\n"


def test_spectrum_json_default_max():
    code, out, _ = call(["spectrum", "3", "5", "--format", "json"])
    doc = json.loads(out)
    assert doc["r_max"] == 8
    assert doc["feasible"] == [3, 5, 6, 7, 8] and doc["infeasible"] == [1, 2, 4]


def test_feasible_exit_codes():
    assert call(["feasible", "--r", "6", "7", "7"])[:2] == (0, "r=6 feasible\n")
    assert call(["feasible", "--r", "7", "7", "7"])[:2] == (1, "r=7 infeasible\n")


def test_feasible_oracle_json():
    code, out, _ = call(["feasible", "--r", "4", "7", "7", "--oracle", "--format", "json"])
    doc = json.loads(out)
    assert code == 0 and doc["feasible"] is True and doc["oracle"] is True


def test_threshold_oracle():
    code, out, _ = call(["threshold", "--oracle", "3", "5", "--format", "json"])
    doc = json.loads(out)
    assert code == 0 and doc["p"] == 5 and doc["oracle"] == 5 and doc["d"] == 2


def test_oracle_mismatch_reported(monkeypatch):
    monkeypatch.setattr("eqcolor.cli.oracle_threshold", lambda inst: 99)
    code, _, err = call(["threshold", "--oracle", "7", "7"])
    assert code == 1
    assert "p=8" in err and "oracle=99" in err


def test_oracle_budget_is_usage_error():
    code, _, err = call(["threshold", "--oracle", "1000", "1000", "1000"])
    assert code == 2 and "budget" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        [],
        ["threshold"],
        ["threshold", "0", "4"],
        ["threshold", "x"],
        ["feasible", "7", "7"],
        ["feasible", "--r", "0", "7"],
        ["p", "--q", "abc", "7"],
        ["spectrum", "--format", "xml", "7"],
    ],
)
def test_usage_errors(argv):
    code, out, err = call(argv)
    assert code == 2
    assert err


def test_sizes_file(tmp_path):
    path = tmp_path / "sizes.txt"
    path.write_text("# K(7,7)\n7\n\n7  # second part\n")
    assert call(["threshold", "--file", str(path)])[:2] == (0, "p=8 d=2\n")
    assert call(["threshold", "--file", str(path), "3"])[0] == 2
    assert call(["threshold", "--file", str(tmp_path / "missing")])[0] == 2
    path.write_text("7\nseven\n")
    code, _, err = call(["threshold", "--file", str(path)])
    assert code == 2 and ":2:" in err


def test_check_round_trip(tmp_path):
    _, out, _ = call(["color", "--r", "9", "2", "3", "5", "--format", "json"])
    path = tmp_path / "c.json"
    path.write_text(out)
    assert call(["check", "--coloring", str(path), "2", "3", "5"])[:2] == (0, "valid\n")


def test_check_rejects(tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"schema": 1, "r": 2, "classes": [[3], [5]], "empty_classes": 0}))
    code, out, _ = call(["check", "--coloring", str(path), "3", "5"])
    assert code == 1 and out.startswith("invalid: unbalanced")
    path.write_text(json.dumps({"schema": 1, "r": 3, "classes": [[4, 3], [4, 3]]}))
    code, out, _ = call(["check", "--coloring", str(path), "7", "7", "--format", "json"])
    doc = json.loads(out)
    assert code == 1 and doc["valid"] is False
    assert doc["problems"][0].startswith("class_count")


@pytest.mark.parametrize(
    "content",
    ["not json", "[]", '{"schema": 2, "classes": []}', '{"schema": 1}',
     '{"schema": 1, "classes": [[1.5]]}', '{"schema": 1, "classes": [1, 2]}'],
)
def test_check_malformed(tmp_path, content):
    path = tmp_path / "c.json"
    path.write_text(content)
    assert call(["check", "--coloring", str(path), "1", "2"])[0] == 2


def test_deterministic_output():
    argv = ["spectrum", "4", "9", "9", "--format", "json"]
    assert call(argv) == call(argv)


@pytest.mark.parametrize(
    "values, text",
    [([], "none"), ([3], "3"), ([1, 2, 3], "1-3"), ([2, 4, 6, 8, 9, 10], "2,4,6,8-10")],
)
def test_format_ranges(values, text):
    assert format_ranges(values) == text


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "eqcolor", "threshold", "7", "7"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "p=8 d=2\n"
