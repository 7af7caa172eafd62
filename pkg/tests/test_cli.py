"""CLI surface: text output, JSON payloads against the schema, exit codes."""

import json
import pathlib

import pytest

jsonschema = pytest.importorskip("jsonschema")

from param_atlas.cli import main

SCHEMA = json.loads(
    (pathlib.Path(__file__).resolve().parent.parent / "docs" / "schema.json").read_text()
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--output", "json")
    assert code == 0, err
    payload = json.loads(out)
    jsonschema.validate(payload, SCHEMA)
    return payload


# -- text output ----------------------------------------------------------------


def test_census_text_table(capsys):
    code, out, _ = run(capsys, "census", "--group", "gsp4", "--q", "3", "--ell", "5")
    assert code == 0
    assert "C2A" in out and "C2B" in out
    assert "Z/2" in out


def test_bg_ring_text_contains_dickson_relation(capsys):
    code, out, _ = run(capsys, "bg-ring", "--group", "sl2", "--q", "3")
    assert code == 0
    assert "c^3 - 4*c" in out


def test_coverage_text_marks(capsys):
    code, out, _ = run(capsys, "coverage", "--group", "gsp4", "--q", "3", "--ell", "5")
    assert code == 0
    assert "twisted-class-not-reached" in out
    # one uncovered row, four covered
    assert out.count("✗") == 1
    assert out.count("✓") == 4


def test_oracle_twisted_text(capsys):
    code, out, _ = run(capsys, "oracle", "twisted", "--order", "4", "--twist", "inv")
    assert code == 0
    assert "twisted orbit count: 2" in out


def test_oracle_avoidant_fail_verdict_is_schema_valid(capsys):
    # a scalar torus draw is legitimately non-avoidant: verdict fail, exit 0
    payload = run_json(capsys, "oracle", "avoidant", "--group", "gl2", "--q", "3",
                       "--ell", "7", "--seed", "0")
    assert payload["verdict"] == "fail"
    assert payload["counterexample"]["failures"]


# -- json output and schema -------------------------------------------------------


def test_census_json_schema(capsys):
    payload = run_json(capsys, "census", "--group", "sl2", "--q", "3", "--ell", "7")
    assert payload["kind"] == "census"
    assert payload["schema_version"] == 1
    assert [e["label"] for e in payload["entries"]] == ["C0", "C1A", "C1B"]


def test_census_json_curated_note(capsys):
    payload = run_json(capsys, "census", "--group", "gsp6", "--q", "3", "--ell", "5")
    noted = [e for e in payload["entries"] if e["curated_note"]]
    assert len(noted) == 1
    assert noted[0]["partition"] == [4, 2]
    assert "curated-uncertain" in noted[0]["curated_note"]


def test_coverage_json_schema(capsys):
    payload = run_json(capsys, "coverage", "--group", "u3", "--q", "3", "--ell", "7")
    assert payload["kind"] == "coverage"
    missing = [e for e in payload["entries"] if not e["covered"]]
    assert len(missing) == 1
    assert missing[0]["reason"] == "no-stable-levi-witness"
    covered = [e for e in payload["entries"] if e["covered"]]
    assert all(e["witness"] is not None for e in covered)


def test_bg_ring_json_schema(capsys):
    payload = run_json(capsys, "bg-ring", "--group", "u2", "--q", "3")
    assert payload["kind"] == "bg_ring"
    assert payload["relations"] == ["-e2 + e2^-3", "-e1 + e1^3*e2^-3 - 3*e1*e2^-2"]
    assert {g["name"]: g["invertible"] for g in payload["generators"]} == {
        "e1": False,
        "e2": True,
    }


def test_oracle_json_schema_all_operations(capsys):
    for argv in (
        ("oracle", "twisted", "--order", "5", "--twist", "inv"),
        ("oracle", "commutant", "--group", "sl2", "--q", "4", "--ell", "5"),
        ("oracle", "classify", "--group", "gsp4", "--q", "3", "--ell", "7"),
        ("oracle", "avoidant", "--group", "gl2", "--q", "3", "--ell", "7",
         "--seed", "5"),
        ("oracle", "jacobian", "--group", "sl2", "--q", "4", "--ell", "5",
         "--trials", "10"),
        ("oracle", "identities", "--group", "gsp4", "--q", "3", "--ell", "7",
         "--trials", "5"),
    ):
        payload = run_json(capsys, *argv)
        assert payload["kind"] == "oracle"
        assert payload["verdict"] == "pass", argv
        assert payload["counterexample"] is None


def test_json_output_deterministic(capsys):
    argv = ("census", "--group", "gsp4", "--q", "3", "--ell", "5", "--output", "json")
    code1 = main(list(argv))
    first = capsys.readouterr().out
    code2 = main(list(argv))
    second = capsys.readouterr().out
    assert code1 == code2 == 0
    assert first == second


def test_oracle_digest_tracks_inputs(capsys):
    p1 = run_json(capsys, "oracle", "twisted", "--order", "4", "--twist", "id")
    p2 = run_json(capsys, "oracle", "twisted", "--order", "4", "--twist", "inv")
    assert p1["inputs_digest"] != p2["inputs_digest"]
    assert p1["result"]["orbit_count"] == 4
    assert p2["result"]["orbit_count"] == 2


# -- exit codes --------------------------------------------------------------------


def test_exit_code_bad_preset(capsys):
    code, _, err = run(capsys, "census", "--group", "e8", "--q", "3", "--ell", "5")
    assert code == 2
    assert "error" in err


def test_exit_code_sl1_unsupported(capsys):
    code, _, _ = run(capsys, "census", "--group", "sl1", "--q", "3", "--ell", "5")
    assert code == 2


def test_exit_code_ell_two_for_gsp(capsys):
    code, _, err = run(capsys, "census", "--group", "gsp4", "--q", "3", "--ell", "2")
    assert code == 2
    assert "ell" in err


def test_exit_code_non_prime_power_q_for_bg_ring(capsys):
    code, _, err = run(capsys, "bg-ring", "--group", "sl2", "--q", "6")
    assert code == 2
    assert "prime power" in err


def test_exit_code_composite_ell(capsys):
    code, _, err = run(capsys, "oracle", "commutant", "--group", "sl2", "--q", "3",
                       "--ell", "6")
    assert code == 2
    assert "prime" in err


def test_exit_code_q_not_coprime_to_ell(capsys):
    code, _, _ = run(capsys, "oracle", "commutant", "--group", "sl2", "--q", "5",
                     "--ell", "5")
    assert code == 2


def test_exit_code_budget(capsys):
    code, _, err = run(capsys, "oracle", "twisted", "--order", "40", "--budget", "100")
    assert code == 3
    assert "budget" in err.lower()
    assert "--budget" in err  # message says how to raise it


def test_exit_code_missing_required_flag():
    with pytest.raises(SystemExit) as exc:
        main(["oracle", "commutant", "--group", "sl2", "--q", "3"])
    assert exc.value.code == 2


def test_exit_code_unknown_subcommand():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_oracle_scope_restrictions(capsys):
    code, _, _ = run(capsys, "oracle", "commutant", "--group", "gsp4", "--q", "3",
                     "--ell", "7")
    assert code == 2
    code, _, _ = run(capsys, "oracle", "classify", "--group", "gl3", "--q", "3",
                     "--ell", "7")
    assert code == 2
    code, _, _ = run(capsys, "oracle", "jacobian", "--group", "u3", "--q", "3",
                     "--ell", "7")
    assert code == 2
