import pytest

from errors.surface import SurgeryError
from services.surface.boundary_sum import BoundarySumService
from tests.helpers import piece

boundary_sum = BoundarySumService()


def test_genera_add_and_circles_fuse():
    result = boundary_sum.run(piece("F", 1, k=2), piece("G", 2, k=1), "k")
    assert result.key == "F"
    assert (result.genus, result.boundary) == (3, {"k": 2})
    # the fused circles lose one to the band
    assert result.euler_char == -2 + -3 - 1


def test_other_sutures_are_kept_and_key_can_be_given():
    result = boundary_sum.run(
        piece("F", 0, k=1, c=1), piece("G", 1, k=1), "k", key="FG"
    )
    assert result.key == "FG"
    assert result.boundary == {"c": 1, "k": 1}


def test_suture_must_meet_both_components():
    with pytest.raises(SurgeryError, match="on suture 'k'"):
        boundary_sum.run(piece("F", 1, k=1), piece("G", 1, c=1), "k")


@pytest.mark.parametrize("first, second, expected", [
    ((1, 1), (1, 1), (2, 1)),
    ((0, 1), (3, 1), (3, 1)),
    ((1, 2), (2, 1), (3, 2)),
])
def test_shapes(first, second, expected):
    result = boundary_sum.run(
        piece("F", first[0], k=first[1]),
        piece("G", second[0], k=second[1]),
        "k",
    )
    assert (result.genus, result.boundary_total) == expected
