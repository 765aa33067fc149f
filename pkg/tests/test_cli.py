import json
from pathlib import Path

import pytest

from pfstab.builders import build_clock_chain
from pfstab.cli import main
from pfstab.codefile import canonical_json, code_to_payload, save_code

REPO_CODES = Path(__file__).resolve().parent.parent / "codes"


def run(capsys, *argv):
    status = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_validate_good_file(capsys):
    status, out, _ = run(capsys, "validate", REPO_CODES / "pf_8_1_3_d3.json")
    assert status == 0
    assert json.loads(out.splitlines()[0]) == {"abelian": True, "parity_ok": True, "phase_ok": True}


def test_validate_charge_violation_exits_1(capsys, tmp_path):
    payload = {
        "format_version": 1,
        "D": 3,
        "num_modes": 4,
        "generators": [{"mu": 0, "alpha": [1, 0, 0, 0]}],
    }
    path = tmp_path / "bad.json"
    path.write_text(canonical_json(payload))
    status, _, err = run(capsys, "validate", path)
    assert status == 1
    assert "parity" in err


def test_validate_malformed_file_exits_2(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"format_version": 1}')
    status, _, err = run(capsys, "validate", path)
    assert status == 2
    assert "error" in err


def test_params_reports_known_parameters(capsys):
    status, out, _ = run(capsys, "params", REPO_CODES / "pf_8_1_3_d3.json")
    assert status == 0
    assert "distance d       : 3" in out
    assert "|S|              : 27" in out


def test_params_json_mode(capsys):
    status, out, _ = run(capsys, "params", "--json", REPO_CODES / "pf_6_1_3_d7.json")
    assert status == 0
    payload = json.loads(out)
    assert payload["k"] == 1 and payload["distance"]["value"] == 3


def test_syndrome_command(capsys):
    status, out, _ = run(capsys, "syndrome", REPO_CODES / "pf_8_1_3_d3.json", "--error", "g3")
    assert status == 0
    assert json.loads(out) == {"error": "g3", "syndrome": [0, 2, 2]}


def test_syndrome_bad_operator_exits_2(capsys):
    status, _, err = run(capsys, "syndrome", REPO_CODES / "pf_8_1_3_d3.json", "--error", "q9")
    assert status == 2
    assert "error" in err


def test_chain_and_double_pipeline(capsys, tmp_path):
    chain_file = tmp_path / "chain.json"
    status, _, _ = run(capsys, "chain", "--D", 3, "--n", 4, "--out", chain_file)
    assert status == 0
    doubled_file = tmp_path / "css.json"
    status, _, _ = run(capsys, "double", chain_file, "--out", doubled_file)
    assert status == 0
    payload = json.loads(doubled_file.read_text())
    assert payload["num_qudits"] == 8 and len(payload["rows"]) == 6


def test_double_d6_command(capsys, tmp_path):
    out_file = tmp_path / "d6.json"
    status, _, _ = run(capsys, "double-d6", REPO_CODES / "pf_8_1_3_d3.json", "--out", out_file)
    assert status == 0
    payload = json.loads(out_file.read_text())
    assert payload["D"] == 6 and len(payload["generators"]) == 7


def test_double_d6_wrong_modulus_exits_1(capsys, tmp_path):
    src = tmp_path / "chain2.json"
    save_code(src, build_clock_chain(2, 2))
    status, _, err = run(capsys, "double-d6", src)
    assert status == 1


def test_embed_command(capsys, tmp_path):
    out_file = tmp_path / "embedded.json"
    status, _, _ = run(capsys, "embed", REPO_CODES / "qudit_5_1_3_d3.json", "--out", out_file)
    assert status == 0
    payload = json.loads(out_file.read_text())
    assert payload["num_modes"] == 20 and len(payload["generators"]) == 9


def test_toric_command_output_round_trips(capsys, tmp_path):
    out_file = tmp_path / "toric.json"
    status, _, _ = run(capsys, "toric", "--p", 2, "--l", 1, "--a", 2, "--b", 2, "--out", out_file)
    assert status == 0
    payload = json.loads(out_file.read_text())
    assert payload["D"] == 4 and payload["num_modes"] == 32
    assert payload["provenance"]["parameters"] == {"p": 2, "l": 1, "a": 2, "b": 2}


def test_toric_rejects_nonprime(capsys):
    status, _, err = run(capsys, "toric", "--p", 4, "--l", 1, "--a", 2, "--b", 2)
    assert status == 2
    assert "prime" in err


def test_builder_outputs_are_deterministic(capsys, tmp_path):
    f1, f2 = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "chain", "--D", 5, "--n", 3, "--out", f1)
    run(capsys, "chain", "--D", 5, "--n", 3, "--out", f2)
    assert f1.read_bytes() == f2.read_bytes()


def test_search_command_with_spec_file(capsys, tmp_path):
    spec_file = tmp_path / "spec.json"
    spec_file.write_text(canonical_json({
        "D": 2, "num_modes": 4, "target_k": 1, "target_d": 2, "max_hits": 0,
    }))
    out_file = tmp_path / "cert.json"
    status, _, err = run(capsys, "search", spec_file, "--canonical", "--out", out_file)
    assert status == 0
    cert = json.loads(out_file.read_text())
    assert cert["exhausted"] and len(cert["hits"]) == 1
    assert "wall_time_s" not in cert
    assert "candidate vectors" in err


def test_search_budget_exit_code(capsys, tmp_path):
    spec_file = tmp_path / "spec.json"
    spec_file.write_text(canonical_json({
        "D": 3, "num_modes": 6, "target_k": 1, "target_d": 3, "max_hits": 0, "max_tuples": 10,
    }))
    status, out, _ = run(capsys, "search", spec_file)
    assert status == 3


def test_search_bad_spec_exits_2(capsys, tmp_path):
    spec_file = tmp_path / "spec.json"
    spec_file.write_text('{"D": 3}')
    status, _, err = run(capsys, "search", spec_file)
    assert status == 2


def test_oracle_command(capsys):
    status, out, _ = run(capsys, "oracle", "--D", 3, "--n", 2)
    assert status == 0
    assert "PASS" in out and "FAIL" not in out


def test_oracle_with_code_file(capsys):
    status, out, _ = run(capsys, "oracle", "--D", 3, "--n", 4, "--file", REPO_CODES / "pf_8_1_3_d3.json")
    assert status == 0
    assert "projector trace" in out and "FAIL" not in out


def test_usage_error_on_unknown_command(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
