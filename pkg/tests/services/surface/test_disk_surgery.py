import pytest
from hypothesis import given, strategies as st

from constants.topology import DiskKind
from dtos.surface import DiskSurgery, Surface
from errors.surface import SurgeryError
from services.surface.disk_surgery import DiskSurgeryService
from services.surface.euler import EulerCharacteristicService
from tests.helpers import piece, shape

surgery = DiskSurgeryService()
euler = EulerCharacteristicService()


def surface_of(*components):
    return Surface(components=components)


def test_non_separating_lowers_genus_and_keeps_key():
    result = surgery.run(
        surface_of(piece("S", 3, k=1)), DiskSurgery(target="S")
    )
    assert result.surface.keys() == ["S"]
    assert result.surface.get("S").genus == 2
    assert result.surface.get("S").boundary == {"k": 1}
    assert result.lineage == {"S": ("S",)}


def test_separating_splits_with_default_keys():
    result = surgery.run(
        surface_of(piece("S", 3, k=1)),
        DiskSurgery(
            target="S",
            kind=DiskKind.SEPARATING,
            left=shape(1, k=1),
            right=shape(2),
        ),
    )
    assert result.surface.keys() == ["S.0", "S.1"]
    assert result.lineage["S"] == ("S.0", "S.1")
    assert result.surface.get("S.1").boundary == {}


def test_separating_uses_explicit_keys():
    result = surgery.run(
        surface_of(piece("S", 2, k=1)),
        DiskSurgery(
            target="S",
            kind=DiskKind.SEPARATING,
            left=shape(1, k=1),
            right=shape(1),
            left_key="top",
            right_key="bottom",
        ),
    )
    assert result.surface.keys() == ["top", "bottom"]


@pytest.mark.parametrize(
    "component, disk, message",
    [
        (piece("S", 1, k=1), DiskSurgery(target="X"), "unknown component"),
        (piece("S", 0, k=2), DiskSurgery(target="S"), "genus >= 1"),
        (piece("S", 1), DiskSurgery(target="S"), "sphere"),
        (
            piece("S", 2, k=1),
            DiskSurgery(
                target="S",
                kind=DiskKind.SEPARATING,
                left=shape(1, k=1),
                right=shape(2),
            ),
            "splits genus",
        ),
        (
            piece("S", 2, k=1),
            DiskSurgery(
                target="S",
                kind=DiskKind.SEPARATING,
                left=shape(1, k=1),
                right=shape(1, k=1),
            ),
            "does not partition",
        ),
        (
            piece("S", 2, k=1),
            DiskSurgery(
                target="S",
                kind=DiskKind.SEPARATING,
                left=shape(2, k=1),
                right=shape(0),
            ),
            "sphere",
        ),
        (
            piece("S", 2, k=1),
            DiskSurgery(target="S", kind=DiskKind.SEPARATING),
            "needs both sides",
        ),
    ],
)
def test_rejected_compressions(component, disk, message):
    with pytest.raises(SurgeryError, match=message):
        surgery.run(surface_of(component), disk)


def test_separating_key_clash_is_rejected():
    with pytest.raises(SurgeryError, match="duplicate id"):
        surgery.run(
            surface_of(piece("S", 2, k=1), piece("S.0", 1, k=1)),
            DiskSurgery(
                target="S",
                kind=DiskKind.SEPARATING,
                left=shape(1, k=1),
                right=shape(1),
            ),
        )


def test_run_all_composes_lineage():
    result = surgery.run_all(
        surface_of(piece("S", 3, k=1)),
        [
            DiskSurgery(
                target="S",
                kind=DiskKind.SEPARATING,
                left=shape(2, k=1),
                right=shape(1),
            ),
            DiskSurgery(target="S.0"),
        ],
    )
    assert result.lineage == {"S": ("S.0", "S.1")}
    assert result.surface.get("S.0").genus == 1


@given(
    genus=st.integers(min_value=1, max_value=8),
    circles=st.integers(min_value=1, max_value=4),
    count=st.integers(min_value=1, max_value=8),
)
def test_each_compression_raises_euler_by_two(genus, circles, count):
    count = min(count, genus)
    start = surface_of(piece("S", genus, k=circles))
    result = surgery.run_all(start, [DiskSurgery(target="S")] * count)
    assert euler.run(result.surface) == euler.run(start) + 2 * count
