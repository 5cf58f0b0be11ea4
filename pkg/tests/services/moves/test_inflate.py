import pytest

from constants.topology import BodyLabel
from errors.moves import MoveError
from services.complex.census import handle_index_of, handle_number_of
from services.moves.inflate import DeflateService, InflateService

inflate = InflateService()
deflate = DeflateService()


def test_inflate_adds_a_product_layer(circular):
    start = circular(1, 2)
    outcome = inflate.run(start, "R")
    result = outcome.complex
    assert [c.key for c in result.thick] == ["R~t1", "S"]
    assert [c.key for c in result.thin] == ["R", "R~r1"]
    assert result.body("S", BodyLabel.A).minus_keys() == ("R~r1",)
    assert handle_number_of(result) == handle_number_of(start)
    assert handle_index_of(result) == handle_index_of(start)


def test_inflate_picks_free_keys(circular):
    once = inflate.run(circular(1, 2), "R").complex
    twice = inflate.run(once, "R").complex
    assert twice.component("R~t2") is not None
    assert twice.component("R~r2") is not None


def test_deflate_inverts_inflate(circular):
    start = circular(2, 3)
    inflated = inflate.run(start, "R").complex
    assert deflate.run(inflated, "R~t1").complex == start


def test_deflate_needs_trivial_bodies(circular):
    with pytest.raises(MoveError, match="two trivial bodies"):
        deflate.run(circular(1, 2), "S")


def test_deflate_needs_two_surfaces(trefoil):
    with pytest.raises(MoveError, match="same surface on both sides"):
        deflate.run(trefoil, "S")


def test_inflate_needs_thin(circular):
    with pytest.raises(MoveError, match="not a thin surface"):
        inflate.run(circular(1, 2), "S")
