"""End-to-end command tests: JSON payloads and exit codes, in process."""

import json

import pytest

from retractkit.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestBasicCommands:
    def test_parse(self, capsys):
        code, data = invoke(capsys, "parse", "y + x + 1")
        assert code == 0
        assert data == {"status": "ok", "ring": "comm", "poly": "x + y + 1", "terms": 3, "degree": 1}

    def test_parse_error_exit_code(self, capsys):
        code, data = invoke(capsys, "parse", "x + $")
        assert code == 2
        assert data["status"] == "parse_error"
        assert "position 4" in data["error"]

    def test_deg_of_zero_is_precondition(self, capsys):
        code, data = invoke(capsys, "deg", "0")
        assert code == 2
        assert data["status"] == "precondition_violated"

    def test_wdeg(self, capsys):
        code, data = invoke(capsys, "wdeg", "x*y", "2", "3")
        assert code == 0
        assert data["weighted_degree"] == 5

    def test_leading(self, capsys):
        code, data = invoke(capsys, "leading", "x^2 + 2*x*y + y", "--ring", "comm")
        assert data["leading_form"] == "x^2 + 2*x*y"
        assert data["leading_coeff"] == "1"
        assert data["degree"] == 2

    def test_commutator_is_noncomm_only(self, capsys):
        code, data = invoke(capsys, "commutator", "x", "y")
        assert code == 0
        assert data["result"] == "x*y - y*x"

    def test_jacobian(self, capsys):
        code, data = invoke(capsys, "jacobian", "x^2", "y^3")
        assert data["result"] == "6*x*y^2"

    def test_subst(self, capsys):
        code, data = invoke(capsys, "subst", "x*y", "y", "x", "--ring", "noncomm")
        assert data["result"] == "y*x"

    def test_abelianize(self, capsys):
        code, data = invoke(capsys, "abelianize", "x*y - y*x + x")
        assert data["result"] == "x"

    def test_divides(self, capsys):
        code, data = invoke(capsys, "divides", "x + y", "x^2 - y^2")
        assert data == {"status": "ok", "divides": True, "quotient": "x - y"}
        code, data = invoke(capsys, "divides", "x + y", "x^2 + y^2")
        assert data["divides"] is False

    def test_pretty_output(self, capsys):
        code = run(["parse", "x", "--pretty"])
        out = capsys.readouterr().out
        assert out.startswith("{\n  ")
        assert json.loads(out)["status"] == "ok"


ENDO_SWAP = '{"ring": "comm", "x": "y", "y": "x"}'
ENDO_SHEAR = '{"ring": "comm", "x": "x", "y": "y + x"}'
ENDO_NEG_PROJ = '{"ring": "comm", "x": "-x", "y": "0"}'


class TestEndoCommands:
    def test_apply(self, capsys):
        code, data = invoke(capsys, "apply", ENDO_SWAP, "x^2 + y")
        assert data["result"] == "y^2 + x"

    def test_apply_bad_endo_json(self, capsys):
        code, data = invoke(capsys, "apply", "{broken", "x")
        assert code == 2
        assert data["status"] == "parse_error"

    def test_compose_and_power(self, capsys):
        code, data = invoke(capsys, "compose", ENDO_SWAP, ENDO_SWAP)
        assert data["endo"] == {"ring": "comm", "x": "x", "y": "y"}
        code, data = invoke(capsys, "power", ENDO_SHEAR, "3")
        assert data["endo"]["y"] == "3*x + y"

    def test_idempotent_and_injective(self, capsys):
        _, data = invoke(capsys, "idempotent", '{"ring": "comm", "x": "x", "y": "0"}')
        assert data["idempotent"] is True
        _, data = invoke(capsys, "injective", '{"ring": "comm", "x": "x", "y": "x"}')
        assert data["injective"] is False

    def test_is_auto_reports_method(self, capsys):
        _, data = invoke(capsys, "is-auto", ENDO_SWAP)
        assert data == {"status": "ok", "automorphism": True, "method": "factorization"}
        _, data = invoke(capsys, "is-auto", '{"ring": "noncomm", "x": "y", "y": "x"}')
        assert data["method"] == "commutator"

    def test_decompose(self, capsys):
        _, data = invoke(capsys, "decompose", '{"ring": "comm", "x": "y + x^2", "y": "x"}')
        assert data["automorphism"] is True
        assert data["verified"] is True
        assert [f["kind"] for f in data["factors"]] == ["linear", "triangular_x"]
        assert data["factors"][1]["shift"] == "t^2"

    def test_decompose_non_automorphism(self, capsys):
        code, data = invoke(capsys, "decompose", '{"ring": "comm", "x": "x^2", "y": "y"}')
        assert code == 0
        assert data == {"status": "ok", "automorphism": False, "factors": None}

    def test_random_auto_deterministic(self, capsys):
        _, first = invoke(capsys, "random-auto", "--seed", "4", "--length", "3")
        _, second = invoke(capsys, "random-auto", "--seed", "4", "--length", "3")
        assert first == second

    def test_term_budget_maps_to_exit_one(self, capsys, monkeypatch):
        monkeypatch.setenv("RETRACTKIT_MAX_TERMS", "10")
        code, data = invoke(
            capsys, "subst", "x^3", "x^2 + y^2 + x + y + 1", "y", "--ring", "comm"
        )
        assert code == 1
        assert data["status"] == "term_budget_exceeded"


class TestEstimateCommands:
    def test_check_estimate_ok(self, capsys):
        code, data = invoke(
            capsys, "check-estimate", "x^2", "y^3", "x*y", "--ring", "noncomm"
        )
        assert code == 0
        assert data["actual_degree"] == 5
        assert data["lower_bound"] == "5"
        assert data["case"] == "independent"
        assert data["satisfied"] is True

    def test_check_estimate_precondition(self, capsys):
        code, data = invoke(
            capsys, "check-estimate", "x", "x^2", "x*y", "--ring", "noncomm"
        )
        assert code == 2
        assert data["status"] == "precondition_violated"

    def test_corrupted_bound_trips_inconsistency(self, capsys, monkeypatch):
        monkeypatch.setenv("RETRACTKIT_CORRUPT_BOUND", "7")
        code, data = invoke(
            capsys, "check-estimate", "x^2", "y^3", "x*y", "--ring", "noncomm"
        )
        assert code == 3
        assert data["status"] == "theorem_inconsistency"
        assert data["lower_bound"] == "12"

    def test_invalid_corruption_value_ignored(self, capsys, monkeypatch):
        monkeypatch.setenv("RETRACTKIT_CORRUPT_BOUND", "garbage")
        code, data = invoke(
            capsys, "check-estimate", "x^2", "y^3", "x*y", "--ring", "noncomm"
        )
        assert code == 0

    def test_fuzz(self, capsys):
        code, data = invoke(capsys, "fuzz-estimates", "--trials", "20", "--seed", "2")
        assert code == 0
        assert data["completed"] == 20
        assert data["failures"] == 0

    def test_fuzz_report_files(self, capsys, tmp_path):
        code, data = invoke(
            capsys,
            "fuzz-estimates",
            "--trials",
            "15",
            "--out-dir",
            str(tmp_path),
        )
        assert code == 0
        assert (tmp_path / data["csv_path"].split("/")[-1]).exists()
        assert (tmp_path / data["plot_path"].split("/")[-1]).exists()
        assert data["plot_path"].endswith(".png")

    def test_growth_automorphism_flag(self, capsys):
        code, data = invoke(capsys, "growth", ENDO_SHEAR, "--k-max", "3")
        assert code == 0
        assert data["automorphism"] is True
        assert "satisfied" not in data

    def test_growth_injective_endo(self, capsys):
        endo = '{"ring": "noncomm", "x": "x", "y": "y + x*y"}'
        code, data = invoke(capsys, "growth", endo, "--k-max", "4")
        assert code == 0
        assert data["automorphism"] is False
        assert data["satisfied"] is True
        assert data["floors"] == [2, 3, 4, 5, 6]
        assert [k for k, _ in data["series"]] == [0, 1, 2, 3, 4]

    def test_growth_noninjective_rejected(self, capsys):
        code, data = invoke(
            capsys, "growth", '{"ring": "comm", "x": "x", "y": "x"}', "--k-max", "2"
        )
        assert code == 2

    def test_growth_report_files(self, capsys, tmp_path):
        endo = '{"ring": "comm", "x": "x", "y": "y^2"}'
        code, data = invoke(capsys, "growth", endo, "--out-dir", str(tmp_path))
        assert code == 0
        assert (tmp_path / "growth.csv").exists()
        assert (tmp_path / "growth.png").exists()
        assert data["csv_path"].endswith("growth.csv")


class TestRetractCommands:
    def test_membership(self, capsys):
        _, data = invoke(capsys, "membership", "x^4 + 2*x^2 + 5", "x^2")
        assert data == {"status": "ok", "member": True, "expression": "t^2 + 2*t + 5"}
        _, data = invoke(capsys, "membership", "x", "x^2")
        assert data["member"] is False

    def test_decompose_inner(self, capsys):
        _, data = invoke(capsys, "decompose-inner", "x^4 + 2*x^2*y + y^2 + 1", "2")
        assert data["found"] is True
        assert data["inner"] == "x^2 + y"
        assert data["outer"] == "t^2 + 1"

    def test_retraction_power(self, capsys):
        code, data = invoke(capsys, "retraction-power", ENDO_NEG_PROJ, "x^2")
        assert code == 0
        assert data["exponent"] == 2
        assert data["retraction"] == {"ring": "comm", "x": "x", "y": "0"}
        assert data["certificate"]["generator"] == "x"
        assert data["certificate"]["image_x"] == "t"
        assert data["certificate"]["image_y"] == "0"

    def test_retraction_power_exhaustion(self, capsys):
        code, data = invoke(
            capsys, "retraction-power", ENDO_SHEAR, "x", "--m-max", "5"
        )
        assert code == 1
        assert data["status"] == "not_found_within_bound"

    def test_find_retraction(self, capsys):
        code, data = invoke(capsys, "find-retraction", "x*y")
        assert code == 0
        assert data["retraction"] == {"ring": "comm", "x": "x*y", "y": "1"}
        assert data["image_x"] == "t"
        assert data["image_y"] == "1"
        assert data["complete"] is True

    def test_find_retraction_miss_is_exit_one(self, capsys):
        code, data = invoke(capsys, "find-retraction", "x^2 + y^2")
        assert code == 1
        assert data == {"status": "not_found_within_bound", "complete": True}

    def test_check_canonical(self, capsys):
        _, data = invoke(capsys, "check-canonical", "x + x*y")
        assert data["canonical"] is True
        _, data = invoke(capsys, "check-canonical", "2*x")
        assert data["canonical"] is False


class TestCertifyCommands:
    def test_certify_negative(self, capsys):
        code, data = invoke(capsys, "certify", "x*y")
        assert code == 0
        assert data["verdict"] == "not_test_element"
        assert data["retraction"] == {"ring": "comm", "x": "x*y", "y": "1"}
        assert data["generator"] == "x*y"
        assert data["outer"] == "t"

    def test_certify_positive_modulo_bounds(self, capsys):
        code, data = invoke(capsys, "certify", "x^2 + y^2", "--orbit-samples", "20")
        assert code == 0
        assert data["verdict"] == "test_element_modulo_bounds"
        assert data["searches_complete"] is True
        assert data["orbit_samples"] == 20

    def test_orbit_falsify(self, capsys):
        code, data = invoke(capsys, "orbit-falsify", "x + x*y", "t^2 + t")
        assert code == 0
        assert data["exponent"] == 2
        assert data["two_route_match"] is True
        assert data["affine_match"] is False
        assert data["twist"] == {"ring": "comm", "x": "x", "y": "x^2 + y"}

    def test_orbit_falsify_noncomm(self, capsys):
        code, data = invoke(
            capsys, "orbit-falsify", "x + x*y - y*x", "t^2", "--ring", "noncomm"
        )
        assert code == 0
        assert data["exponent"] is None

    def test_orbit_falsify_bad_generator(self, capsys):
        code, data = invoke(capsys, "orbit-falsify", "x + y^2", "t")
        assert code == 2

    def test_injection_check_consistent(self, capsys):
        code, data = invoke(capsys, "injection-check", ENDO_SWAP, "x*y")
        assert code == 0
        assert data["consistent"] is True
        assert data["witness"]["kind"] == "mixed_monomial"

    def test_injection_check_inconsistent(self, capsys):
        endo = '{"ring": "comm", "x": "x + y", "y": "0"}'
        code, data = invoke(capsys, "injection-check", endo, "x^2 + 2*x*y + y^2")
        assert code == 3
        assert data["status"] == "theorem_inconsistency"
        assert data["injective"] is False
