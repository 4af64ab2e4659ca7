import json

import pytest

from instcomp.cli import EXIT_CAP, EXIT_FAIL, EXIT_OK, EXIT_PARSE, parse_sizes, run


def test_parse_sizes():
    assert parse_sizes("2-4") == [2, 3, 4]
    assert parse_sizes("1,3,5") == [1, 3, 5]
    assert parse_sizes("6") == [6]


def test_measure_json():
    code, out = run(["measure", "--family", "conn", "--vertices", "4", "--no-timing"])
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["dt"] == 6 and data["cmin"] == 3 and data["cmax"] == 4
    assert data["instc"] == {"num": 2, "den": 1}
    assert data["instc_upper"] == {"num": 2, "den": 1}
    assert "timing_ms" not in data


def test_measure_json_round_trip_is_byte_identical():
    code, out = run(["measure", "--family", "omb", "--n", "5"])
    assert code == EXIT_OK
    assert json.dumps(json.loads(out), sort_keys=True, indent=2) + "\n" == out
    assert {t["name"] for t in json.loads(out)["trees"]} == {"omb_tree", "naive"}


def test_measure_csv():
    code, out = run(["measure", "--family", "maj", "--n", "3", "--format", "csv", "--measures", "dt,instc"])
    assert code == EXIT_OK
    header, row = out.strip().split("\n")
    assert header.startswith("function,n,dt")
    assert "3/2" in row


def test_measure_file(tmp_path):
    path = tmp_path / "f.tt"
    path.write_text("n=2\n0110\n")
    code, out = run(["measure", "--file", str(path), "--measures", "instc", "--no-timing"])
    assert code == EXIT_OK and json.loads(out)["instc"] == {"num": 1, "den": 1}


def test_cap_violation_exit_code():
    code, out = run(["measure", "--family", "xor", "--n", "14", "--measures", "instc"])
    assert code == EXIT_CAP
    err = json.loads(out)["error"]
    assert err["type"] == "cap_exceeded" and err["cap"] == 13 and err["n"] == 14


@pytest.mark.parametrize(
    "argv",
    [
        ["measure", "--family", "clique", "--vertices", "4", "--k", "7"],
        ["measure"],
        ["measure", "--family", "bogus"],
        ["verify", "nope"],
        ["frobnicate"],
        ["report-gap", "--generator", "random"],
        ["report-gap", "--generator", "random", "--n", "3", "--seed", "-1"],
    ],
)
def test_parse_errors_exit_3(argv):
    code, out = run(argv)
    assert code == EXIT_PARSE
    assert json.loads(out)["error"]["type"] == "parse_error"


def test_bad_table_file(tmp_path):
    path = tmp_path / "bad.tt"
    path.write_text("n=2\n011\n")
    assert run(["measure", "--file", str(path)])[0] == EXIT_PARSE


def test_verify_pass_and_fail_codes():
    code, out = run(["verify", "gt", "--n", "4"])
    assert code == EXIT_OK and out.rstrip().endswith("PASS 10/10")
    code, out = run(["verify", "gt", "--n", "1"])
    assert code == EXIT_FAIL and "[FAIL] gt n=1 cmin" in out


def test_verify_is_deterministic():
    argv = ["verify", "oracle", "--n", "4", "--count", "5", "--seed", "3"]
    assert run(argv) == run(argv)


def test_report_gap_deterministic(monkeypatch):
    argv = ["report-gap", "--generator", "random", "--n", "5", "--count", "6", "--seed", "9"]
    monkeypatch.setenv("INSTCOMP_WORKERS", "1")
    serial = run(argv)
    monkeypatch.setenv("INSTCOMP_WORKERS", "2")
    parallel = run(argv)
    assert serial == parallel
    assert serial[0] == EXIT_OK
    assert len(serial[1].strip().split("\n")) == 7


def test_report_gap_family():
    code, out = run(["report-gap", "--generator", "gt", "--n", "3"])
    assert code == EXIT_OK
    assert out.strip().split("\n")[1] == "gt(n=3),6,6,2,4,2/1,3/1,3/2"


def test_witness_and_tree_file(tmp_path):
    code, out = run(["witness", "--family", "maj", "--n", "3"])
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["instc"] == {"num": 3, "den": 2}
    path = tmp_path / "t.txt"
    path.write_text(data["tree"])
    code, out = run(["witness", "--family", "maj", "--n", "3", "--tree", str(path)])
    assert code == EXIT_OK and json.loads(out)["instc_wrt"] == {"num": 3, "den": 2}


def test_witness_rejects_wrong_tree(tmp_path):
    path = tmp_path / "t.txt"
    path.write_text("(leaf 0)")
    code, out = run(["witness", "--family", "maj", "--n", "3", "--tree", str(path)])
    assert code == EXIT_PARSE


def test_adversary_command(tmp_path):
    code, out = run(["adversary", "--n", "2"])
    data = json.loads(out)
    assert code == EXIT_OK and data["depth"] == 4 and not data["refuted"]
    path = tmp_path / "t.txt"
    path.write_text("(q 2 (leaf 0) (leaf 1))")
    data = json.loads(run(["adversary", "--n", "1", "--tree", str(path)])[1])
    assert data["depth"] == 1 and data["refuted"]
