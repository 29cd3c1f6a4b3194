import json

import pytest

from hypersimplicial.main import EXIT_FAILED, EXIT_INVALID, EXIT_OK, main
from hypersimplicial.subdivision.subdivision_main import Subdivision, build_subdivision


def run_cli(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_identity(capsys):
    code, out = run_cli(capsys, "identity", "--d", "3", "--i", "2", "--r", "2")
    assert code == EXIT_OK
    assert out.strip() == "lhs=32 rhs=32 equal=true"


def test_identity_by_enumeration_json(capsys):
    code, out = run_cli(capsys, "identity", "--d", "3", "--i", "2", "--r", "2", "--enumerate", "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out) == {"r": 2, "d": 3, "i": 2, "lhs": "32", "rhs": "32", "equal": True}


def test_invalid_parameters_exit_with_two(capsys):
    assert run_cli(capsys, "identity", "--d", "3", "--i", "4", "--r", "2")[0] == EXIT_INVALID
    assert run_cli(capsys, "identity", "--d", "3", "--i", "1", "--r", "0")[0] == EXIT_INVALID
    assert run_cli(capsys, "identity", "--d", "3")[0] == EXIT_INVALID
    assert run_cli(capsys, "locate", "--d", "3", "--i", "1", "--r", "2", "--point", "1/2,0,0,0")[0] == EXIT_INVALID


def test_sweep(capsys):
    code, out = run_cli(capsys, "sweep", "--d-max", "2", "--r-max", "2", "--format", "json")
    assert code == EXIT_OK
    report = json.loads(out)
    assert (report["triples"], report["failures"]) == (6, 0)


def test_volume_oracles(capsys):
    assert run_cli(capsys, "volume", "--d", "3", "--i", "2", "--oracle", "ehrhart") == (EXIT_OK, "4\n")
    assert run_cli(capsys, "volume", "--d", "3", "--i", "2") == (EXIT_OK, "4\n")

    code, out = run_cli(capsys, "volume", "--d", "3", "--i", "2", "--oracle", "ehrhart", "--format", "json")
    assert json.loads(out)["counts"] == ["1", "6", "19", "44"]


def test_locate(capsys):
    code, out = run_cli(capsys, "locate", "--d", "3", "--i", "1", "--r", "2", "--point", "3/2,1/2,0,0")
    assert code == EXIT_OK
    assert "witness v=(1,0,0,0);j=1" in out.splitlines()

    code, out = run_cli(
        capsys, "locate", "--d", "3", "--i", "1", "--r", "2", "--point", "3/2,1/2,0,0", "--format", "json"
    )
    payload = json.loads(out)
    assert payload["witness"] == {"v": [1, 0, 0, 0], "j": 1}
    assert {"v": [1, 0, 0, 0], "j": 1, "member": True} in payload["containing"]
    assert len(payload["containing"]) == 4


def test_subdivide_single_cell(capsys):
    code, out = run_cli(capsys, "subdivide", "--d", "2", "--i", "1", "--r", "1")
    assert code == EXIT_OK
    assert json.loads(out) == {"r": 1, "d": 2, "i": 1, "cells": [{"v": [0, 0, 0], "j": 1}]}


def test_subdivide_accepts_json_format(capsys):
    plain = run_cli(capsys, "subdivide", "--d", "2", "--i", "1", "--r", "2")
    as_json = run_cli(capsys, "subdivide", "--d", "2", "--i", "1", "--r", "2", "--format", "json")
    assert plain == as_json
    assert plain[0] == EXIT_OK


def test_subdivide_round_trip(tmp_path, capsys):
    target = tmp_path / "h.json"
    assert run_cli(capsys, "subdivide", "--d", "3", "--i", "2", "--r", "3", "--out", str(target))[0] == EXIT_OK
    text = target.read_text(encoding="utf-8")
    assert Subdivision.from_dict(json.loads(text)) == build_subdivision(3, 3, 2)
    assert text == build_subdivision(3, 3, 2).to_json() + "\n"


def test_guardrail(capsys):
    assert run_cli(capsys, "subdivide", "--d", "8", "--i", "1", "--r", "1")[0] == EXIT_INVALID
    assert run_cli(capsys, "subdivide", "--d", "8", "--i", "1", "--r", "1", "--force")[0] == EXIT_OK


def test_verify_reports_are_byte_identical(capsys):
    argv = ["verify", "--d", "3", "--i", "2", "--r", "2", "--samples", "1000", "--seed", "0", "--format", "json"]
    first_code, first = run_cli(capsys, *argv)
    second_code, second = run_cli(capsys, *argv)
    assert first_code == second_code == EXIT_OK
    assert first == second
    assert json.loads(first)["checks"]["volume"] == {"lhs": "32", "rhs": "32", "equal": True}


def test_verify_text_report(capsys):
    code, out = run_cli(capsys, "verify", "--d", "2", "--i", "1", "--r", "2", "--samples", "100")
    assert code == EXIT_OK
    assert "3·1 + 1·1 = 4 = 2^2·1" in out
    assert "FAIL" not in out


def test_verify_corrupted_cell_file_fails(tmp_path, capsys):
    document = build_subdivision(2, 3, 2).to_dict()
    document["cells"][0]["v"] = [1, 1, 1, 1]
    target = tmp_path / "broken.json"
    target.write_text(json.dumps(document), encoding="utf-8")

    code, out = run_cli(capsys, "verify", "--d", "3", "--i", "2", "--r", "2", "--cells", str(target), "--format", "json")
    assert code == EXIT_FAILED
    assert json.loads(out)["passed"] is False


def test_verify_fractional_cell_file_is_invalid(tmp_path, capsys):
    document = build_subdivision(2, 2, 1).to_dict()
    document["cells"][0] = {"v": [0.4, 0.7, 1.2], "j": 1.9}
    target = tmp_path / "fractional.json"
    target.write_text(json.dumps(document), encoding="utf-8")
    assert run_cli(capsys, "verify", "--d", "2", "--i", "1", "--r", "2", "--cells", str(target))[0] == EXIT_INVALID


def test_directory_paths_are_invalid(tmp_path, capsys):
    assert run_cli(capsys, "verify", "--d", "2", "--i", "1", "--r", "2", "--cells", str(tmp_path))[0] == EXIT_INVALID
    assert run_cli(capsys, "volume", "--d", "3", "--i", "2", "--out", str(tmp_path))[0] == EXIT_INVALID


def test_verify_cell_file_with_other_parameters_is_invalid(tmp_path, capsys):
    target = tmp_path / "h.json"
    target.write_text(build_subdivision(2, 3, 2).to_json(), encoding="utf-8")
    assert run_cli(capsys, "verify", "--d", "3", "--i", "1", "--r", "2", "--cells", str(target))[0] == EXIT_INVALID


def test_missing_cell_file_is_invalid(tmp_path, capsys):
    missing = tmp_path / "nothing.json"
    assert run_cli(capsys, "verify", "--d", "3", "--i", "1", "--r", "2", "--cells", str(missing))[0] == EXIT_INVALID


@pytest.mark.parametrize("fmt, marker", [("dot", "graph H_2_2_1 {"), ("json", '{"nodes":')])
def test_dual_graph_export(capsys, fmt, marker):
    code, out = run_cli(capsys, "dual-graph", "--d", "2", "--i", "1", "--r", "2", "--format", fmt)
    assert code == EXIT_OK
    assert out.startswith(marker)


def test_oracles(capsys):
    code, out = run_cli(capsys, "oracles", "--d-max", "2", "--samples", "100", "--format", "json")
    assert code == EXIT_OK
    reports = json.loads(out)
    assert reports["membership"]["checked"] == 100
    assert all(report["failures"] == 0 for report in reports.values())
