import json

import pytest

from hptsums.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.rstrip("\n"), captured.err


def test_row_plain(capsys):
    code, out, _ = run(capsys, "row", "--q", "6", "--n", "3")
    assert code == 0 and out == "1B 3A 2B 2B 3A 1B"


def test_row_n0(capsys):
    code, out, _ = run(capsys, "row", "--q", "6", "--n", "0")
    assert code == 0 and out == "1B"


def test_row_invalid_q(capsys):
    code, _, err = run(capsys, "row", "--q", "4", "--n", "1")
    assert code == 2 and "q must be >= 5" in err


def test_row_truncation(capsys):
    code, _, err = run(capsys, "row", "--q", "6", "--n", "10",
                       "--entry-cap", "10")
    assert code == 1 and "entry cap" in err


def test_row_json_deterministic(capsys):
    code, out1, _ = run(capsys, "row", "--q", "6", "--n", "3",
                        "--format", "json")
    code2, out2, _ = run(capsys, "row", "--q", "6", "--n", "3",
                         "--format", "json")
    assert code == code2 == 0 and out1 == out2
    assert json.loads(out1)["entries"][1] == [3, "A"]


def test_sums_plain(capsys):
    code, out, _ = run(capsys, "sums", "--q", "6", "--k", "2",
                       "--n-max", "4")
    assert code == 0
    assert [int(line.split()[-1]) for line in out.splitlines()] \
        == [2, 6, 28, 160]


def test_sums_k1(capsys):
    code, out, _ = run(capsys, "sums", "--q", "6", "--k", "1",
                       "--n-max", "3")
    assert code == 0
    assert out.splitlines()[-1].endswith("12")


def test_sums_state_vectors(capsys):
    code, out, _ = run(capsys, "sums", "--q", "6", "--k", "2", "--n-max",
                       "4", "--state-vectors", "--format", "json")
    payload = json.loads(out)
    assert payload["rows"][-1]["state_vector"] == [98, 49, 62, 34]


def test_recurrence_json_schema(capsys):
    code, out, _ = run(capsys, "recurrence", "--k", "2", "--format", "json")
    payload = json.loads(out)
    assert payload == {
        "k": 2, "order": 4,
        "coefficients": [[2, 1], [-7, -1], [8], [-2]],
        "x_strip_count": 1,
        "initial_values": [[2], [6], [4, 4], [-20, 6, 4]],
        "variant": "full",
    }


def test_recurrence_k0(capsys):
    code, out, _ = run(capsys, "recurrence", "--k", "0", "--format", "json")
    assert json.loads(out)["coefficients"] == [[-1, 1], [1, -1], [1]]


def test_recurrence_k5_plain(capsys):
    code, out, _ = run(capsys, "recurrence", "--k", "5")
    assert "c1 = q+11" in out and "c4 = -10q+88" in out and "c5 = -10" in out


def test_recurrence_csv(capsys):
    code, out, _ = run(capsys, "recurrence", "--k", "2", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "k,c1,c2,c3,c4"
    assert lines[1] == "2,q+2,-q-7,8,-2"


def test_verify_small_grid(capsys):
    code, out, _ = run(capsys, "verify", "--k-range", "2..3",
                       "--q-list", "5,6", "--cap", "10000")
    assert code == 0 and out.endswith("all-exact")


def test_verify_counting_range(capsys):
    code, out, _ = run(capsys, "verify", "--k-range", "0..1",
                       "--q-list", "6", "--cap", "10000")
    assert code == 0


def test_verify_invalid_q(capsys):
    code, _, err = run(capsys, "verify", "--k-range", "2..2",
                       "--q-list", "4")
    assert code == 2


def test_table_exit_ok(capsys):
    code, out, _ = run(capsys, "table", "--k-max", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[1].startswith("0,q-1,-q+1,1")
    assert len(lines) == 5


def test_table_exploratory_marker(capsys):
    code, out, _ = run(capsys, "table", "--k-max", "12")
    assert code == 0
    assert "no fixture (exploratory)" in out.splitlines()[-1]


def test_conjecture(capsys):
    code, out, _ = run(capsys, "conjecture", "--k-min", "2", "--k-max", "9")
    assert code == 0
    assert "k=9" in out and "trailing zero" in out


def test_conjecture_kmin_validation(capsys):
    code, _, err = run(capsys, "conjecture", "--k-min", "1", "--k-max", "3")
    assert code == 2


def test_output_file(tmp_path, capsys):
    target = tmp_path / "row.txt"
    code, out, _ = run(capsys, "row", "--q", "6", "--n", "3",
                       "-o", str(target))
    assert code == 0
    assert target.read_text().strip() == "1B 3A 2B 2B 3A 1B"
