"""Problem files, dispatch, report emission and exit codes.

Core claims:
    - the golden file parses to 3 points, 6 edges, 3 members, a total map
    - parse failures name the offending identifier or field
    - machine reports are canonical: sorted keys, "p/q" rationals, and
      byte-identical across repeated runs
    - normalized documents round-trip to an equivalent problem
    - exit codes: 0 pass, 1 verdict failure, 2 input error
"""

from __future__ import annotations

import json

import pytest

from semifix import ParseError, ValidationError
from semifix.cli import (build_problem, emit_report, execute, load_document,
                         main, parse_problem, problem_digest)


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestParsing:
    def test_golden_file(self, golden_path):
        problem = parse_problem(str(golden_path))
        assert problem.space.size == 3
        assert len(problem.graph.edges) == 6
        assert len(problem.family) == 3
        assert problem.tmap is not None
        assert problem.semantics == "existential"

    def test_unknown_map_target_named(self, tmp_path, golden_path):
        doc = load_document(str(golden_path))
        doc["map"]["bar4"] = "bar9"
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(doc))
        with pytest.raises(ParseError, match="bar9"):
            parse_problem(str(path))

    def test_missing_loop_is_validation_error(self, tmp_path, golden_path):
        doc = load_document(str(golden_path))
        doc["graph"]["implicit_loops"] = False
        path = tmp_path / "noloop.json"
        path.write_text(json.dumps(doc))
        with pytest.raises(ValidationError, match="loop"):
            parse_problem(str(path))

    def test_invalid_json_reports_line(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(ParseError, match="line"):
            parse_problem(str(path))

    def test_unknown_top_level_key(self, tmp_path):
        path = tmp_path / "extra.json"
        path.write_text(json.dumps({"space": {"points": [0],
                                              "matrix": [[0]]},
                                    "bogus": 1}))
        with pytest.raises(ParseError, match="bogus"):
            parse_problem(str(path))

    def test_matrix_and_formula_conflict(self, tmp_path):
        path = tmp_path / "conflict.json"
        path.write_text(json.dumps({"space": {"points": [0, 1],
                                              "matrix": [[0, 1], [1, 0]],
                                              "formula": "squared_difference"}}))
        with pytest.raises(ParseError, match="not both"):
            parse_problem(str(path))

    def test_formula_needs_numeric_labels(self, tmp_path):
        path = tmp_path / "labels.json"
        path.write_text(json.dumps({"space": {"points": ["a", "b"],
                                              "formula": "squared_difference"}}))
        with pytest.raises(ParseError, match="numeric"):
            parse_problem(str(path))

    def test_default_family_is_powerset(self, tmp_path):
        path = tmp_path / "nofam.json"
        path.write_text(json.dumps({"space": {"points": [0, 1, 4],
                                              "formula": "squared_difference"}}))
        problem = parse_problem(str(path))
        assert len(problem.family) == 7
        assert problem.tmap is None

    def test_rational_matrix_entries(self, tmp_path):
        path = tmp_path / "rat.json"
        path.write_text(json.dumps({"space": {
            "points": ["a", "b"], "matrix": [[0, "1/3"], ["1/3", 0]]}}))
        problem = parse_problem(str(path))
        from fractions import Fraction
        assert problem.space.d(0, 1) == Fraction(1, 3)

    def test_semantics_override_changes_digest(self, golden_path):
        p1 = parse_problem(str(golden_path))
        p2 = parse_problem(str(golden_path), semantics_override="universal")
        assert problem_digest(p1) != problem_digest(p2)


class TestRoundTrip:
    def test_normalized_document_reparses_equivalently(self, tmp_path, golden_path):
        problem = parse_problem(str(golden_path))
        path = tmp_path / "normalized.json"
        path.write_text(json.dumps(problem.normalized))
        again = parse_problem(str(path))
        assert again.normalized == problem.normalized
        assert problem_digest(again) == problem_digest(problem)

    def test_machine_output_byte_identical(self, golden_path):
        problem = parse_problem(str(golden_path))
        a = emit_report(execute("analyze", problem), "machine")
        b = emit_report(execute("analyze", problem), "machine")
        assert a == b
        again = parse_problem(str(golden_path))
        c = emit_report(execute("analyze", again), "machine")
        assert a == c


class TestExecutePayloads:
    def test_hausdorff_payload(self, golden_path):
        problem = parse_problem(str(golden_path))
        report = execute("hausdorff", problem)
        assert report.result["names"] == ["bar0", "bar1", "bar4"]
        assert report.result["matrix"] == [["0", "1", "16"],
                                           ["1", "0", "9"],
                                           ["16", "9", "0"]]

    def test_analyze_payload(self, golden_path):
        problem = parse_problem(str(golden_path))
        report = execute("analyze", problem)
        assert report.ok
        assert report.result["lambda_star"] == "1/9"
        assert report.result["witness_pair"] == ["bar1", "bar4"]
        assert report.result["edge_preserving"] is True

    def test_unknown_command(self, golden_path):
        problem = parse_problem(str(golden_path))
        with pytest.raises(ParseError):
            execute("frobnicate", problem)

    def test_iterate_needs_map(self, tmp_path):
        path = tmp_path / "nomap.json"
        path.write_text(json.dumps({"space": {"points": [0, 1],
                                              "formula": "squared_difference"}}))
        problem = parse_problem(str(path))
        with pytest.raises(ParseError, match="map"):
            execute("iterate", problem, {"start": "{0}"})

    def test_text_analyze_contains_witness_pair(self, golden_path):
        problem = parse_problem(str(golden_path))
        text = emit_report(execute("analyze", problem), "text")
        assert "(bar1, bar4)" in text
        assert "1/9" in text


class TestMainExitCodes:
    def test_analyze_pass(self, capsys, golden_path):
        code, out, _ = run_cli(capsys, "analyze", str(golden_path))
        assert code == 0
        assert "1/9" in out

    def test_analyze_verdict_failure(self, capsys, cycle_path):
        code, out, _ = run_cli(capsys, "analyze", str(cycle_path))
        assert code == 1
        assert "not-a-contraction" in out

    def test_missing_file_is_input_error(self, capsys):
        code, _, err = run_cli(capsys, "analyze", "no/such/file.json")
        assert code == 2
        assert "error" in err

    def test_bad_map_id_is_input_error(self, capsys, tmp_path, golden_path):
        doc = load_document(str(golden_path))
        doc["map"]["bar4"] = "barX"
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(doc))
        code, _, err = run_cli(capsys, "fixed-points", str(path))
        assert code == 2
        assert "barX" in err

    def test_validate_reports_violations_with_exit_one(self, capsys, tmp_path):
        path = tmp_path / "asym.json"
        path.write_text(json.dumps({"space": {
            "points": ["a", "b"], "matrix": [[0, 1], [2, 0]]}}))
        code, out, _ = run_cli(capsys, "validate", str(path))
        assert code == 1
        assert "symmetry" in out

    def test_validate_parse_error_exits_two(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{")
        code, _, err = run_cli(capsys, "validate", str(path))
        assert code == 2

    def test_validate_golden_passes(self, capsys, golden_path):
        code, out, _ = run_cli(capsys, "--machine", "validate", str(golden_path))
        assert code == 0
        payload = json.loads(out)
        assert payload["result"]["valid"] is True
        assert payload["result"]["family_members"] == 3

    def test_chainable_exit_tracks_verdict(self, capsys, golden_path):
        code, *_ = run_cli(capsys, "chainable", str(golden_path), "--epsilon", "2")
        assert code == 1
        code, *_ = run_cli(capsys, "chainable", str(golden_path), "--epsilon", "10")
        assert code == 0

    def test_iterate_unknown_start_exits_two(self, capsys, golden_path):
        code, _, err = run_cli(capsys, "iterate", str(golden_path),
                               "--start", "bar7")
        assert code == 2
        assert "bar7" in err

    def test_integral_alpha_out_of_range_exits_two(self, capsys, golden_path):
        code, _, err = run_cli(capsys, "integral", str(golden_path),
                               "--alpha", "1", "--gamma", "const:1")
        assert code == 2

    def test_integral_gamma_parse_error_exits_two(self, capsys, golden_path):
        code, _, err = run_cli(capsys, "integral", str(golden_path),
                               "--alpha", "1/2", "--gamma", "wat:1")
        assert code == 2

    def test_semantics_flag_reaches_report(self, capsys, golden_path):
        code, out, _ = run_cli(capsys, "--machine", "--semantics", "universal",
                               "theorem", str(golden_path))
        payload = json.loads(out)
        assert payload["options"]["semantics"] == "universal"
        assert payload["result"]["hypotheses"]["y_t"] == ["bar0"]


class TestBuildProblemDirect:
    def test_build_from_document(self):
        doc = {"space": {"points": [0, 1], "matrix": [[0, 4], [4, 0]]},
               "graph": {"edges": [[0, 1]]},
               "family": {"x": [0], "y": [1]},
               "map": {"x": "x", "y": "x"}}
        problem = build_problem(doc)
        assert problem.family.names == ("x", "y")
        assert problem.tmap.table == (0, 0)
