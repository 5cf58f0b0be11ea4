import pytest

from errors.moves import MoveError
from services.complex.census import handle_index_of
from services.moves.amalgamate import AmalgamateService
from services.moves.inflate import InflateService

amalgamate = AmalgamateService()


def test_amalgamating_an_inflated_layer_restores_the_complex(circular):
    start = circular(2, 3)
    inflated = InflateService().run(start, "R").complex
    outcome = amalgamate.run(inflated, ["R~r1"], name="S")
    assert outcome.complex == start
    assert outcome.record.arguments == {"thin": ["R~r1"], "name": "S"}


def test_default_name_joins_thick_keys(circular):
    inflated = InflateService().run(circular(2, 3), "R").complex
    result = amalgamate.run(inflated, ["R~r1"]).complex
    merged = result.component("R~t1+S")
    assert (merged.genus, merged.boundary) == (3, {"k": 1})
    assert handle_index_of(result) == handle_index_of(inflated)


def test_single_level_cannot_merge_with_itself(circular):
    with pytest.raises(MoveError, match="with itself"):
        amalgamate.run(circular(1, 2), ["R"])


@pytest.mark.parametrize("thin, message", [
    ([], "nothing to amalgamate"),
    (["S"], "not a thin surface"),
    (["Q"], "not a thin surface"),
])
def test_rejected_arguments(circular, thin, message):
    with pytest.raises(MoveError, match=message):
        amalgamate.run(circular(1, 2), thin)


def test_custom_name_must_be_a_key(circular):
    inflated = InflateService().run(circular(2, 3), "R").complex
    with pytest.raises(MoveError, match="not a valid key"):
        amalgamate.run(inflated, ["R~r1"], name="S|1")
