import json
from pathlib import Path

import pytest

from thompsonf import cli

FIXTURES = Path(__file__).parent / "fixtures"


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_canon_prints_canonical_form_and_value(capsys):
    code, out, _ = run(capsys, "canon", "10(0100)")
    assert code == 0
    assert out == "1(0010) = 17/30\n"


def test_canon_accepts_fractions(capsys):
    code, out, _ = run(capsys, "canon", "4/15")
    assert code == 0
    assert out == "(0100) = 4/15\n"


def test_act_applies_a_word(capsys):
    code, out, _ = run(capsys, "act", "10(0100)", "a")
    assert code == 0
    assert out == "01(0100)\n"


def test_eval_prints_breakpoints(capsys):
    code, out, _ = run(capsys, "eval", "abA")
    assert code == 0
    assert out.splitlines() == ["0 -> 0", "3/4 -> 3/4", "7/8 -> 13/16", "15/16 -> 7/8", "1 -> 1"]


def test_value_prints_exact_fraction(capsys):
    code, out, _ = run(capsys, "value", "1(0)")
    assert code == 0
    assert out == "1/2\n"


def test_graph_dot_matches_fixture_and_is_deterministic(capsys):
    code, first, _ = run(capsys, "graph", "1/2", "--radius", "4", "--format", "dot")
    assert code == 0
    code, second, _ = run(capsys, "graph", "1/2", "--radius", "4", "--format", "dot")
    assert code == 0
    assert first == second
    assert first == (FIXTURES / "ball_half_r4.dot").read_text()


def test_graph_json(capsys):
    code, out, _ = run(capsys, "graph", "(0)", "--radius", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload == {
        "seed": "(0)",
        "radius": 2,
        "vertices": ["(0)"],
        "edges": [[0, "x0", 0], [0, "x1", 0]],
    }


def test_graph_capacity_error_exits_one(capsys):
    code, out, err = run(capsys, "graph", "1/2", "--radius", "6", "--cap", "10")
    assert code == 1
    assert "vertex cap of 10" in err


def test_path_finds_a_conjugating_word(capsys):
    code, out, _ = run(capsys, "path", "01(0100)", "10(0100)", "--radius", "4")
    assert code == 0
    assert out == "A\n"


def test_path_not_found_exits_one(capsys):
    code, out, err = run(capsys, "path", "1(0)", "0(1)", "--radius", "6")
    assert code == 1
    assert "no path" in err


def test_gens_text_output(capsys):
    code, out, _ = run(capsys, "gens", "1/2")
    assert code == 0
    assert out.splitlines() == ["# point=1(0) h=1 w=0", "abA", "aabAA", "AAba", "AAAbaa", "B"]


def test_gens_json_output(capsys):
    code, out, _ = run(capsys, "gens", "4/15", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["point"] == "(0100)"
    assert payload["w"] == "0100"
    assert len(payload["generators"]) == 5


def test_every_gens_output_passes_verify(capsys):
    for point in ("1/2", "4/15", "10(0011)", "5/6"):
        code, out, _ = run(capsys, "gens", point)
        assert code == 0
        code, out, _ = run(capsys, "verify", point, "--samples", "40")
        assert code == 0, out


def test_verify_reports_and_exits_zero(capsys):
    code, out, _ = run(capsys, "verify", "4/15", "--samples", "30", "--seed", "5")
    assert code == 0
    assert "all passed" in out
    assert "FAIL" not in out.replace("FAILED", "")


def test_verify_output_is_reproducible(capsys):
    code, first, _ = run(capsys, "verify", "5/6", "--samples", "25", "--seed", "11")
    assert code == 0
    code, second, _ = run(capsys, "verify", "5/6", "--samples", "25", "--seed", "11")
    assert code == 0
    assert first == second


def test_selftest_small_run(capsys):
    code, out, _ = run(capsys, "selftest", "--depth", "3", "--label-len", "2")
    assert code == 0
    assert "selftest" in out.splitlines()[-1]
    assert "all passed" in out.splitlines()[-1]


def test_malformed_point_exits_two(capsys):
    code, out, err = run(capsys, "canon", "10(01")
    assert code == 2
    assert "error" in err


def test_malformed_word_exits_two(capsys):
    code, out, err = run(capsys, "act", "1(0)", "xyz")
    assert code == 2
    assert "position 0" in err


def test_fraction_outside_unit_interval_exits_two(capsys):
    code, out, err = run(capsys, "value", "7/3")
    assert code == 2
    assert "outside" in err


def test_unknown_command_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as err:
        cli.main(["frobnicate"])
    assert err.value.code == 2
