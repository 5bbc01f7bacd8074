"""CLI behaviour: exit codes, JSON reports, schema validation, replay corpus."""

import json
from pathlib import Path

import pytest
from jsonschema import Draft202012Validator
from referencing import Registry, Resource

from diffsym.cli import main

SCHEMA_DIR = Path(__file__).resolve().parents[1] / "src" / "diffsym" / "schemas"


@pytest.fixture(scope="module")
def registry():
    resources = []
    for path in SCHEMA_DIR.glob("*.json"):
        contents = json.loads(path.read_text())
        resources.append((contents["$id"], Resource.from_contents(contents)))
    return Registry().with_resources(resources)


def validate(instance, schema_name, registry):
    schema = json.loads((SCHEMA_DIR / schema_name).read_text())
    Draft202012Validator(schema, registry=registry).validate(instance)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_algebra_check_passes(capsys):
    code, _ = run(capsys, "algebra", "check", "--m", "3", "--alpha", "t", "--beta", "t+1")
    assert code == 0


def test_validate_exit_codes(capsys, registry):
    code, report = run_json(
        capsys, "deriv", "validate", "--m", "2", "--alpha", "t", "--beta", "t+1",
        "--du", "(1/(2*t))*u", "--dv", "(1/(2*(t+1)))*v",
    )
    assert code == 0 and report["ok"]
    validate(report, "derivation_verdict.json", registry)
    code, report = run_json(
        capsys, "deriv", "validate", "--m", "2", "--alpha", "t", "--beta", "t+1",
        "--du", "u*v", "--dv", "v",
    )
    assert code == 1 and not report["ok"]
    validate(report, "derivation_verdict.json", registry)


def test_decompose_roundtrip_via_cli(capsys, registry):
    code, report = run_json(
        capsys, "deriv", "decompose", "--m", "2", "--alpha", "t", "--beta", "t+1",
        "--du", "(1/(2*t))*u + 2*t*v", "--dv", "(1/(2*(t+1)))*v - 2*(t+1)*u",
    )
    assert code == 0
    validate(report["theta"], "grid_element.json", registry)


def test_usage_errors_exit_2(capsys):
    assert main(["deriv", "validate", "--m", "2", "--alpha", "t", "--beta", "t+1",
                 "--du", "u +", "--dv", "v"]) == 2
    assert main(["split", "standard", "--m", "2", "--alpha", "t^2", "--beta", "t+1"]) == 2
    assert main(["algebra", "check", "--m", "2", "--alpha", "0", "--beta", "t"]) == 2


def test_split_standard_json(capsys, registry):
    code, report = run_json(capsys, "split", "standard", "--m", "3", "--alpha", "t", "--beta", "t+1")
    assert code == 0
    validate(report, "split_report.json", registry)
    assert report["verdicts"]["gauge"]["ok"]
    assert report["degree"] == 9


def test_split_inner_json(capsys, registry):
    code, report = run_json(
        capsys, "split", "inner", "--m", "2", "--alpha", "t", "--beta", "t+1",
        "--rho", "u", "--half",
    )
    assert code == 0
    validate(report, "split_report.json", registry)
    assert report["transcendence_degree"] == 1


def test_split_generic_json(capsys, registry):
    code, report = run_json(capsys, "split", "generic", "--m", "2", "--alpha", "t", "--beta", "t+1")
    assert code == 0
    validate(report, "split_report.json", registry)
    assert report["transcendence_degree"] == 4


def test_split_maximal_refutes(capsys, registry):
    code, report = run_json(
        capsys, "split", "maximal", "--m", "3", "--alpha", "t", "--beta", "t+1",
        "--nu", "t*(t+1)",
    )
    assert code == 1
    validate(report, "max_subfield_report.json", registry)
    assert report["refuted"]


def test_ode_solve_json(capsys, registry):
    code, report = run_json(capsys, "ode", "solve", "--mu", "0", "--g", "t")
    assert code == 0
    validate(report, "ode_solution.json", registry)
    code, report = run_json(capsys, "ode", "solve", "--mu", "1", "--g", "1/t")
    assert code == 1 and report["particular"] is None
    validate(report, "ode_solution.json", registry)


def test_power_detect_exit_codes(capsys):
    assert main(["power-detect", "--m", "3", "--f", "t^2*(t+1)^3"]) == 1
    assert main(["power-detect", "--m", "3", "--f", "8*t^3/(t+1)^3"]) == 0


def test_replay_all_cases(capsys, registry):
    code, report = run_json(capsys, "replay")
    assert code == 0
    validate(report, "replay_report.json", registry)
    assert report["ok"] and len(report["cases"]) >= 8


def test_replay_single_and_unknown(capsys):
    assert main(["replay", "--case", "tr-identity"]) == 0
    assert main(["replay", "--case", "nope"]) == 2
