import pytest

from errors.constructions import ConstructionError
from services.complex.census import handle_number_of, is_circular
from services.constructions.pattern import (
    CablePatternService,
    PatternSplittingService,
)
from services.constructions.satellite import SatelliteService

satellite = SatelliteService()


def test_cable_of_a_genus_gap_one_splitting(circular, complexes):
    result = satellite.run(
        CablePatternService().run(2, 3), circular(1, 2), 2
    )
    assert is_circular(result)
    assert result.component("R").genus == 3
    assert result.component("S").genus == 4
    assert handle_number_of(result) == 2
    assert result == complexes.get("circular_3_4")


@pytest.mark.parametrize("winding", [1, 2, 3])
def test_handle_numbers_add(circular, winding):
    pattern = PatternSplittingService().run(1, 2, winding)
    knot = circular(2, 4)
    result = satellite.run(pattern, knot, winding)
    assert handle_number_of(result) == (
        handle_number_of(pattern) + handle_number_of(knot)
    )


def test_winding_mismatch(circular):
    pattern = PatternSplittingService().run(1, 1, 3)
    with pytest.raises(ConstructionError, match="winding mismatch"):
        satellite.run(pattern, circular(1, 2), 2)


def test_companion_must_be_circular():
    pattern = PatternSplittingService().run(1, 1, 2)
    with pytest.raises(ConstructionError, match="companion"):
        satellite.run(pattern, pattern, 2)


def test_pattern_sutures_are_checked(circular):
    with pytest.raises(ConstructionError, match="pattern sutures"):
        satellite.run(circular(1, 2), circular(1, 2), 1)
