import pytest

from errors.knots import TableError
from services.evaluator.table import LoadTableService

load = LoadTableService()


def test_default_table(table):
    assert table.knots["3_1"].fibered
    assert table.knots["5_2"].h.exact
    assert table.patterns["P2"].winding == 2


def test_infinite_upper_bound():
    result = load.run("[knots]\n8_20|nonfibered|2|inf|open\n")
    assert result.knots["8_20"].h.upper is None


@pytest.mark.parametrize("text, message", [
    ("[knots]\n3_1|fibered|0|0\n", "expected 5 fields"),
    ("[knots]\n3_1|fibered|2|2|x\n", "must have h = 0"),
    ("[knots]\n3_1|maybe|0|0|x\n", "expected 'fibered'"),
    ("[knots]\n5_2|nonfibered|4|2|x\n", "exceeds upper bound"),
    ("[knots]\n5_2|nonfibered|two|2|x\n", "not an integer"),
    ("[knots]\n3_1|fibered|0|0|x\n3_1|fibered|0|0|x\n", "line 3: duplicate"),
    ("[patterns]\nP|fibered|0|0|0|x\n", "greater than or equal to 1"),
])
def test_table_errors(text, message):
    with pytest.raises(TableError, match=message):
        load.run(text)


def test_records_without_a_section_are_knots():
    result = load.run(
        "3_1|fibered|0|0|fibered\n5_2|nonfibered|2|2|census\n"
    )
    assert result.knots["3_1"].h.exact and result.knots["3_1"].h.lower == 0
    assert result.knots["5_2"].h.lower == 2
    assert not result.patterns
