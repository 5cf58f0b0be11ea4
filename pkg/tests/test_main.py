import pytest

from main import main
from start_utils import PROJECT_ROOT

FIXTURES = PROJECT_ROOT / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_exact(capsys):
    code, out, _ = run(capsys, "eval", "3_1 # 5_2")
    assert code == 0
    assert out.splitlines()[0] == "MN = 2 (exact)"


def test_eval_machine(capsys):
    code, out, _ = run(capsys, "eval", "--machine", "sat(P2,2,5_2)")
    assert code == 0
    assert out.splitlines()[0] == "?|0|4|false"


@pytest.mark.parametrize("expr, expected", [
    ("3_1 #", 2),
    ("cable(2,4,3_1)", 3),
    ("9_99", 3),
])
def test_eval_exit_codes(capsys, expr, expected):
    code, _, err = run(capsys, "eval", expr)
    assert code == expected
    assert err


def test_eval_with_missing_table(capsys, tmp_path):
    code, _, _ = run(
        capsys, "eval", "--table", str(tmp_path / "none.knots"), "3_1"
    )
    assert code == 2


def test_validate_trefoil(capsys):
    code, out, _ = run(capsys, "validate", str(FIXTURES / "trefoil.ghs"))
    assert code == 0
    assert out.strip() == "valid; h=0 j=0; 2 bodies (2 trivial)"


def test_validate_corrupted(capsys):
    code, out, _ = run(capsys, "validate", str(FIXTURES / "corrupted.ghs"))
    assert code == 1
    assert out.startswith("invalid;")
    assert "thick-bodies [S2]" in out


def test_validate_parse_error(capsys, tmp_path):
    broken = tmp_path / "broken.ghs"
    broken.write_text("SURFACES\nR|thin|1|k:1|-\n")
    code, _, err = run(capsys, "validate", str(broken))
    assert code == 2
    assert "unknown suture" in err


def test_scenario(capsys):
    code, out, _ = run(capsys, "scenario", "thm-additivity")
    assert code == 0
    assert out.splitlines()[-1] == "scenario thm-additivity: passed"


def test_unknown_scenario_is_a_usage_error(capsys):
    code, _, _ = run(capsys, "scenario", "thm-nothing")
    assert code == 2


def test_fuzz(capsys):
    code, out, _ = run(
        capsys, "fuzz", "--trials", "5", "--seed", "11", "--max-moves", "5",
        "--no-progress",
    )
    assert code == 0
    assert "violations: 0" in out


def test_realize(capsys):
    code, out, _ = run(capsys, "realize", "cable(2,3,5_2)")
    assert code == 0
    assert out.startswith("SUTURES\nk|toroidal\n")
    assert out.splitlines()[-1] == "# h=2 j=2"


def test_iterated_cable_of_fibered_knot(capsys):
    code, out, _ = run(capsys, "eval", "cable(2,3,cable(3,2,3_1))")
    assert code == 0
    assert out.startswith("MN = 0 (exact)")


def test_validate_gap_one_fixture(capsys):
    code, out, _ = run(capsys, "validate", str(FIXTURES / "circular_1_2.ghs"))
    assert code == 0
    assert out.startswith("valid; h=2 j=2;")


def test_scenario_records(capsys):
    code, out, _ = run(capsys, "scenario", "lemma-incompressible", "--record")
    lines = out.splitlines()
    assert code == 0
    assert [line.split("|")[0] for line in lines[:-1]] == [
        "weak_reduce", "amalgamate", "amalgamate",
    ]
    assert lines[0].endswith("|4|6|4|4")


def test_eval_long_sum(capsys):
    code, out, _ = run(capsys, "eval", " # ".join(["5_2"] * 1000))
    assert code == 0
    assert out.splitlines()[0] == "MN = 2000 (exact)"


def test_eval_too_deep_is_a_parse_error(capsys):
    code, _, err = run(capsys, "eval", "(" * 500 + "3_1" + ")" * 500)
    assert code == 2
    assert "nested deeper" in err
