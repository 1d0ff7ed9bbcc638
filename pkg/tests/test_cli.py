import json

import pytest

from capelli_lab.catalog import catalog_group, catalog_irreps
from capelli_lab.cli import CHECKS, main
from capelli_lab.groups import group_to_dict
from capelli_lab.irreps import irrep_to_dict

VALID_STATUSES = {"pass", "fail", "measured", "skipped"}


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_list_shows_catalog(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0
    assert "S3" in out and "[1,1,2]" in out
    assert "Q8" in out and "[1,1,1,1,2]" in out
    assert "A4" in out and "[1,1,1,3]" in out


def test_capelli_trivial_rendering(capsys):
    code, out, _ = run(capsys, "capelli", "--group", "S3", "--irrep", "triv")
    assert code == 0
    assert "- z" in out
    for name in catalog_group("S3").element_names:
        assert name in out


def test_capelli_standard_rendering(capsys):
    code, out, _ = run(capsys, "capelli", "--group", "S3", "--irrep", "std")
    assert code == 0
    assert "(-5*z + z^2)*e + z*(123) + z*(132)" in out


def test_capelli_evaluated(capsys):
    code, out, _ = run(capsys, "capelli", "--group", "S3", "--irrep", "std", "--at", "-1")
    assert code == 0
    assert "6*e - (123) - (132)" in out


def test_capelli_json_payload(capsys):
    code, out, _ = run(capsys, "capelli", "--group", "S3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["group"] == "S3"
    assert {e["irrep"] for e in payload["elements"]} == {"triv", "sgn", "std"}


def test_unknown_group_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        run(capsys, "capelli", "--group", "nope")
    assert exc.value.code == 2


def test_unknown_irrep_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        run(capsys, "verify", "--group", "S3", "--irrep", "nope", "--checks", "schur")
    assert exc.value.code == 2


def test_unknown_check_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        run(capsys, "verify", "--group", "S3", "--checks", "bogus")
    assert exc.value.code == 2


def test_verify_small_checks_exit_0(capsys):
    code, out, _ = run(capsys, "verify", "--group", "C4", "--checks", "closed-form,basis-capelli")
    assert code == 0
    assert "0 failures" in out


def test_verify_report_schema_round_trip(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    code, _, _ = run(capsys, "verify", "--group", "S3",
                     "--checks", "schur,e-basis,det-variants",
                     "--format", "json", "--out", str(out_path))
    assert code == 0
    payload = json.loads(out_path.read_text())
    assert payload["tool"] == "capelli-lab"
    assert isinstance(payload["version"], str)
    assert payload["group"] == "S3"
    assert isinstance(payload["runtime_ms"], int)
    assert payload["failures"] == 0
    for entry in payload["results"]:
        assert set(entry) == {"name", "check", "irrep", "status", "detail", "runtime_ms"}
        assert entry["name"] in CHECKS
        assert entry["status"] in VALID_STATUSES
        assert isinstance(entry["runtime_ms"], int)
    # round trip: serialize -> parse -> identical structure
    assert json.loads(json.dumps(payload)) == payload


def test_verify_requested_checks_all_appear(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    requested = ["schur", "closed-form", "det-variants"]
    code, _, _ = run(capsys, "verify", "--group", "Q8", "--checks", ",".join(requested),
                     "--format", "json", "--out", str(out_path))
    assert code == 0
    payload = json.loads(out_path.read_text())
    assert payload["checks"] == requested
    assert {e["name"] for e in payload["results"]} == set(requested)


def test_restricted_irrep_skips_set_level_checks(capsys):
    code, out, _ = run(capsys, "verify", "--group", "S3", "--irrep", "std",
                       "--checks", "schur,e-basis,closed-form")
    assert code == 0
    assert out.count("skipped") == 2  # schur and e-basis need the full set
    assert "closed-form" in out and "0 failures" in out


def test_verify_group_file_with_irrep_file(tmp_path, capsys):
    group = catalog_group("S3")
    std = catalog_irreps("S3").by_label("std")
    group_path = tmp_path / "s3.json"
    irrep_path = tmp_path / "std.json"
    group_path.write_text(json.dumps(group_to_dict(group)))
    irrep_path.write_text(json.dumps(irrep_to_dict(std)))
    code, out, _ = run(capsys, "verify", "--group-file", str(group_path),
                       "--irrep-file", str(irrep_path), "--checks", "closed-form")
    assert code == 0
    assert "0 failures" in out


def test_corrupted_irrep_file_exits_3(tmp_path, capsys):
    std = catalog_irreps("S3").by_label("std")
    data = irrep_to_dict(std)
    data["matrices"][3] = data["matrices"][0]  # identity block in the wrong slot
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    with pytest.raises(SystemExit) as exc:
        run(capsys, "verify", "--group", "S3", "--irrep-file", str(path), "--checks", "schur")
    assert exc.value.code == 3


def test_malformed_irrep_file_exits_3(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{\"label\": \"x\"")
    with pytest.raises(SystemExit) as exc:
        run(capsys, "verify", "--group", "S3", "--irrep-file", str(path), "--checks", "schur")
    assert exc.value.code == 3


def test_group_file_without_irrep_file_exits_2(tmp_path, capsys):
    group_path = tmp_path / "s3.json"
    group_path.write_text(json.dumps(group_to_dict(catalog_group("S3"))))
    with pytest.raises(SystemExit) as exc:
        run(capsys, "verify", "--group-file", str(group_path), "--checks", "schur")
    assert exc.value.code == 2


def test_order_limit_env_var(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("CAPELLI_LAB_MAX_ORDER", "4")
    group_path = tmp_path / "s3.json"
    group_path.write_text(json.dumps(group_to_dict(catalog_group("S3"))))
    with pytest.raises(SystemExit) as exc:
        run(capsys, "verify", "--group-file", str(group_path),
            "--irrep-file", str(group_path), "--checks", "schur")
    assert exc.value.code == 2


def test_verify_text_output_is_sorted_and_deterministic(capsys):
    code1, out1, _ = run(capsys, "verify", "--group", "S3", "--checks", "schur,central")
    code2, out2, _ = run(capsys, "verify", "--group", "S3", "--checks", "schur,central")
    assert code1 == code2 == 0
    # identical up to wall-clock timings on the summary line
    assert out1.splitlines()[:-1] == out2.splitlines()[:-1]
