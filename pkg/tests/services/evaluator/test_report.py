from services.evaluator.evaluate import EvaluateExprService
from services.evaluator.parse import ParseExprService
from services.evaluator.report import format_human, format_machine


def evaluation_of(table, text):
    return EvaluateExprService().run(ParseExprService().run(text), table)


def test_human_exact(table):
    text = format_human(evaluation_of(table, "5_2 # 3_1"))
    lines = text.splitlines()
    assert lines[0] == "MN = 2 (exact)"
    assert lines[1].startswith("  additivity under connected sum")
    assert lines[2].startswith("    table: 5_2")


def test_human_interval(table):
    text = format_human(evaluation_of(table, "sat(P2,2,5_2)"))
    assert text.splitlines()[0] == "MN in [0, 4]"


def test_machine_lines(table):
    lines = format_machine(evaluation_of(table, "5_2 # 3_1")).splitlines()
    assert lines[0] == "2|2|2|true"
    assert lines[1] == "0|additivity under connected sum|5_2 # 3_1"
    assert lines[3].startswith("0.1|fibered knots have MN = 0|3_1")


def test_machine_inexact_value_is_unknown(table):
    first = format_machine(evaluation_of(table, "sat(P2,2,5_2)"))
    assert first.splitlines()[0] == "?|0|4|false"
