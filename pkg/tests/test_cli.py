import json

import pytest

from dmod.cli import RunConfig, cmd_report, cmd_sweep, cmd_verify, main, sweep_rows
from dmod.scalar import parse_scalar


def write(tmp_path, forms, beta, name="a.json"):
    p = tmp_path / name
    p.write_text(json.dumps({"forms": forms, "beta": beta}))
    return str(p)


@pytest.fixture
def arr3(tmp_path):
    return write(tmp_path, [["1", "0"], ["0", "1"], ["1", "1"]], ["1/2", "1/2", "1"])


def test_report_json(arr3, capsys):
    assert main(["report", arr3, "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["count"] == 3 and data["case"] == "SumInteger" and data["k"] == 1


def test_report_text(arr3, capsys):
    assert main(["report", arr3]) == 0
    assert capsys.readouterr().out.startswith("c(M) = 3")


def test_report_is_deterministic(arr3, capsys):
    main(["report", arr3, "--json"])
    first = capsys.readouterr().out
    main(["report", arr3, "--json"])
    assert capsys.readouterr().out == first


def test_malformed_scalar(tmp_path, capsys):
    path = write(tmp_path, [["1//2", "0"]], ["0"])
    assert main(["report", path]) == 1
    assert "error" in capsys.readouterr().err


def test_duplicate_line(tmp_path, capsys):
    path = write(tmp_path, [["1", "0"], ["2", "0"]], ["0", "0"])
    assert main(["report", path]) == 1
    assert "DuplicateLine" in capsys.readouterr().err


def test_missing_file(tmp_path):
    assert main(["report", str(tmp_path / "nope.json")]) == 1


def test_explain(arr3, capsys):
    assert main(["explain", arr3]) == 0
    out = capsys.readouterr().out
    assert "P alpha^beta = 0 and Q alpha^beta = 0: True" in out
    assert "Q split" in out and "c(M) = 3" in out


def test_explain_single_line(tmp_path, capsys):
    assert main(["explain", write(tmp_path, [["1", "0"]], ["0"])]) == 0
    assert "c(M) = 2" in capsys.readouterr().out


def test_verify_default_seed_passes(capsys):
    assert main(["verify"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("seed: 0")
    assert "FAIL" not in out


def test_verify_single_suite(capsys):
    assert main(["verify", "--suite", "annihilators"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 2 and "annihilators" in lines[1]


def test_verify_corrupt_q_fails_with_witness(capsys):
    assert main(["verify", "--suite", "annihilators", "--corrupt-q"]) == 2
    assert "residual" in capsys.readouterr().out.lower()


def test_verify_unknown_suite():
    assert main(["verify", "--suite", "nope"]) == 1


def test_verify_json_is_byte_identical(capsys):
    cfg = RunConfig("verify", seed=5, output_format="json")
    cmd_verify(cfg, ["division", "lemma44"])
    a = capsys.readouterr().out
    cmd_verify(cfg, ["division", "lemma44"])
    assert capsys.readouterr().out == a


def test_sweep_rows_match_formulas():
    grid = [parse_scalar("0"), parse_scalar("1/2")]
    rows = sweep_rows(5, grid)
    assert rows and all(r["ok"] for r in rows)
    for r in rows:
        if r["m"] == 2:
            assert r["count"] == 2 ** r["k"]


def test_sweep_empty_grid(capsys):
    assert cmd_sweep(RunConfig("sweep", output_format="json"), 4, []) == 0
    assert json.loads(capsys.readouterr().out) == []


def test_sweep_cli(capsys):
    assert main(["sweep", "--m-max", "3"]) == 0
    assert "formula" in capsys.readouterr().out
    assert main(["sweep", "--m-max", "9"]) == 1
    assert main(["sweep", "--m-max", "2", "--grid", "1//2"]) == 1


def test_report_via_config(arr3, capsys):
    assert cmd_report(RunConfig("report", arr3, output_format="json")) == 0
    assert json.loads(capsys.readouterr().out)["count"] == 3
