import pytest

from errors.surface import SurgeryError
from services.surface.glue import GlueService
from tests.helpers import piece

glue = GlueService()


def test_gluing_two_sutures_recovers_genus():
    # a genus 1 surface with two boundary circles on k and c, glued
    # to an annulus between c and k', gives genus 1 with one circle on k'
    result = glue.run(
        [piece("F", 1, k=1, c=1), piece("A", 0, c=1, q=1)],
        [("c", "c")],
        key="G",
    )
    assert result.boundary == {"k": 1, "q": 1}
    assert result.genus == 1


def test_pairing_distinct_sutures_closes_a_handle():
    result = glue.run([piece("F", 0, a=1, b=1)], [("a", "b")], key="T")
    assert (result.genus, result.boundary) == (1, {})


def test_mismatched_circle_counts_are_rejected():
    with pytest.raises(SurgeryError, match="cannot pair"):
        glue.run([piece("F", 1, a=2, b=1)], [("a", "b")], key="X")


def test_sphere_is_rejected():
    with pytest.raises(SurgeryError, match="sphere"):
        glue.run([piece("D", 0, a=1), piece("E", 0, b=1)], [("a", "b")], "X")


def test_empty_family_is_rejected():
    with pytest.raises(SurgeryError, match="nothing to glue"):
        glue.run([], [], key="X")
