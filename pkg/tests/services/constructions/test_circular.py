from math import gcd

import pytest

from errors.constructions import ConstructionError
from services.complex.census import (
    handle_number_of,
    is_circular,
    is_fibration,
)
from services.constructions.connected_sum import ConnectedSumService
from services.constructions.pattern import (
    CablePatternService,
    PatternSplittingService,
)


@pytest.mark.parametrize("genus_thin, genus_thick", [(0, 1), (1, 1), (2, 5)])
def test_handle_number_is_twice_the_genus_gap(
    circular, genus_thin, genus_thick
):
    complex_ = circular(genus_thin, genus_thick)
    assert is_circular(complex_)
    assert handle_number_of(complex_) == 2 * (genus_thick - genus_thin)


@pytest.mark.parametrize("genus_thin, genus_thick", [(-1, 1), (3, 2)])
def test_bad_genera(circular, genus_thin, genus_thick):
    with pytest.raises(ConstructionError):
        circular(genus_thin, genus_thick)


def test_connected_sum_is_additive(circular):
    result = ConnectedSumService().run(circular(1, 2), circular(1, 3))
    assert result.component("R").genus == 2
    assert result.component("S").genus == 5
    assert result.component("S").boundary == {"k": 1}
    assert handle_number_of(result) == 2 + 4


def test_connected_sum_matches_scenario_fixture(circular, complexes):
    result = ConnectedSumService().run(circular(1, 2), circular(1, 2))
    assert result == complexes.get("circular_2_4")


def test_connected_sum_needs_circular_summands():
    pattern = PatternSplittingService().run(1, 1, 2)
    with pytest.raises(ConstructionError, match="not a circular"):
        ConnectedSumService().run(pattern, pattern)


def test_trefoil_cable_pattern():
    pattern = CablePatternService().run(2, 3)
    thin = pattern.component("R")
    assert (thin.genus, thin.boundary) == (1, {"c": 2, "k": 1})
    assert handle_number_of(pattern) == 0


COPRIME = [
    (p, q)
    for p in range(1, 8)
    for q in range(-7, 8)
    if q != 0 and gcd(p, q) == 1
]


@pytest.mark.parametrize("p, q", COPRIME)
def test_cable_pattern_is_a_fibration(p, q):
    pattern = CablePatternService().run(p, q)
    assert is_fibration(pattern)
    assert pattern.component("R").genus == (p - 1) * (abs(q) - 1) // 2
    assert pattern.component("R").boundary == {"c": p, "k": 1}


@pytest.mark.parametrize("p, q, message", [
    (2, 4, "not coprime"),
    (0, 1, "p >= 1"),
    (1, 0, "q != 0"),
])
def test_cable_pattern_rejects(p, q, message):
    with pytest.raises(ConstructionError, match=message):
        CablePatternService().run(p, q)


def test_pattern_needs_positive_winding():
    with pytest.raises(ConstructionError, match="positive winding"):
        PatternSplittingService().run(1, 1, 0)
