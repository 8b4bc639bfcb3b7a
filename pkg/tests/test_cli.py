import json

import pytest

from grigcube.cli import build_parser, exit_code_for, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def json_lines(out):
    return [json.loads(line) for line in out.splitlines() if line.strip()]


class TestExitCodes:
    def test_exit_code_for(self):
        assert exit_code_for(["pass", "pass"]) == 0
        assert exit_code_for(["pass", "fail"]) == 1
        assert exit_code_for(["fail", "unsupported"]) == 3
        assert exit_code_for([]) == 0

    def test_usage_error(self, capsys):
        assert main(["bogus"]) == 2
        capsys.readouterr()

    def test_missing_required(self, capsys):
        assert main(["schreier"]) == 2
        capsys.readouterr()

    def test_bad_omega_text(self, capsys):
        code, out, err = run_cli(capsys, "schreier", "--omega", "012")
        assert code == 2
        assert "error" in err

    def test_unsupported_sequence(self, capsys):
        code, out, err = run_cli(
            capsys, "check", "--suite", "stab", "--omega", ":000", "--max-len", "6"
        )
        assert code == 3
        records = json_lines(out)
        assert records[0]["status"] == "unsupported"
        assert "unsupported" in err


class TestCheck:
    def test_prefix_passes(self, capsys):
        code, out, err = run_cli(
            capsys, "check", "--suite", "prefix", "--omega", ":012", "--depth", "8"
        )
        assert code == 0
        records = json_lines(out)
        assert len(records) == 1
        assert records[0]["check"] == "prefix"
        assert records[0]["status"] == "pass"
        assert "counterexample" not in records[0]
        assert "1 passed" in err

    def test_multiple_omegas(self, capsys):
        code, out, err = run_cli(
            capsys, "check", "--suite", "reduction",
            "--omega", ":012", "--omega", ":01", "--max-len", "6",
        )
        assert code == 0
        records = json_lines(out)
        assert [r["omega"] for r in records] == [":012", ":01"]

    def test_stab_suite(self, capsys):
        code, out, err = run_cli(
            capsys, "check", "--suite", "stab", "--omega", ":012", "--max-len", "8"
        )
        assert code == 0
        names = [r["check"] for r in json_lines(out)]
        assert names == ["stab_half_line", "stab_punctured", "stab_intersection"]

    def test_records_carry_params(self, capsys):
        code, out, _ = run_cli(
            capsys, "check", "--suite", "reduction", "--omega", ":012",
            "--max-len", "5",
        )
        assert json_lines(out)[0]["params"] == {"max_len": 5}


class TestAct:
    def test_letter_moving_base_vertex(self, capsys):
        code, out, err = run_cli(
            capsys, "act", "--omega", ":012", "--word", "b", "--vertex", "∅"
        )
        assert code == 0
        assert json_lines(out) == [{"result": "0inf,01", "distance": 2}]

    def test_letter_fixing_base_vertex(self, capsys):
        code, out, err = run_cli(
            capsys, "act", "--omega", ":012", "--word", "a", "--vertex", "∅"
        )
        assert code == 0
        assert json_lines(out) == [{"result": "∅", "distance": 0}]

    def test_unreduced_word_accepted(self, capsys):
        code, out, _ = run_cli(
            capsys, "act", "--omega", ":012", "--word", "bcd", "--vertex", "0inf,01"
        )
        assert code == 0
        assert json_lines(out) == [{"result": "0inf,01", "distance": 0}]

    def test_bad_word(self, capsys):
        code, _, err = run_cli(
            capsys, "act", "--omega", ":012", "--word", "xyz"
        )
        assert code == 2


class TestOrbit:
    def test_growth_rows(self, capsys):
        code, out, _ = run_cli(
            capsys, "orbit", "--omega", ":012", "--max-len", "4"
        )
        assert code == 0
        rows = json_lines(out)
        assert [r["length"] for r in rows] == [0, 1, 2, 3, 4]
        assert rows[0] == {"length": 0, "max_distance": 0, "witness_word": ""}
        assert rows[1]["max_distance"] == 2
        assert rows[-1]["max_distance"] >= rows[1]["max_distance"]

    def test_unsupported(self, capsys):
        code, out, err = run_cli(
            capsys, "orbit", "--omega", ":000", "--max-len", "4"
        )
        assert code == 3
        assert out == ""

    def test_max_len_zero(self, capsys):
        code, out, _ = run_cli(capsys, "orbit", "--omega", ":012", "--max-len", "0")
        assert code == 0
        assert json_lines(out) == [
            {"length": 0, "max_distance": 0, "witness_word": ""}
        ]

    def test_off_base_vertex(self, capsys):
        code, out, _ = run_cli(
            capsys, "orbit", "--omega", ":01", "--max-len", "6",
            "--vertex", "0inf",
        )
        assert code == 0
        rows = json_lines(out)
        assert rows[0]["max_distance"] == 0
        assert rows[-1]["max_distance"] >= 4


class TestSchreier:
    def test_dot_output(self, capsys):
        code, out, err = run_cli(
            capsys, "schreier", "--omega", ":012", "--radius", "2"
        )
        assert code == 0
        assert out.startswith("graph schreier {")
        assert '"0inf" -- "1" [label="a", color="red"];' in out
        assert '"01" -- "0inf" [label="b", color="blue"];' in out
        assert '"01" -- "0inf" [label="c", color="green"];' in out

    def test_deterministic(self, capsys):
        _, first, _ = run_cli(capsys, "schreier", "--omega", ":01", "--radius", "3")
        _, second, _ = run_cli(capsys, "schreier", "--omega", ":01", "--radius", "3")
        assert first == second

    def test_parser_defaults(self):
        args = build_parser().parse_args(["schreier", "--omega", ":012"])
        assert args.radius == 3
        assert args.format == "dot"

    def test_radius_zero_single_node(self, capsys):
        code, out, _ = run_cli(
            capsys, "schreier", "--omega", ":012", "--radius", "0"
        )
        assert code == 0
        assert '"0inf";' in out
        # only the basepoint and its own loop appear
        edges = [line for line in out.splitlines() if "--" in line]
        assert edges == ['  "0inf" -- "0inf" [label="d", color="orange"];']

    def test_jsonl_line_count_is_edge_count(self, capsys):
        code, out, _ = run_cli(
            capsys, "schreier", "--omega", ":012", "--radius", "2", "--format", "jsonl"
        )
        assert code == 0
        records = json_lines(out)
        from grigcube.gamma import edge_records
        from grigcube.omega import OmegaSequence

        assert len(records) == len(edge_records(OmegaSequence.parse(":012"), 2))
        assert all(set(r) == {"source", "target", "label"} for r in records)

    def test_unknown_format_is_usage_error(self, capsys):
        code, _, _ = run_cli(
            capsys, "schreier", "--omega", ":012", "--format", "svg"
        )
        assert code == 2
