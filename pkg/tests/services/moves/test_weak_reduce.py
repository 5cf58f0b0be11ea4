import pytest

from constants.topology import Assumption, BodyLabel, DiskKind
from dtos.moves import WeakReductionMove
from dtos.surface import DiskSurgery
from errors.moves import MoveError
from services.complex.assume import AssumeService
from services.complex.census import CensusService
from services.moves.amalgamate import AmalgamateService
from services.moves.weak_reduce import WeakReduceService
from tests.helpers import shape

reduce = WeakReduceService()
census = CensusService()
assume = AssumeService()

NON_SEPARATING = WeakReductionMove(
    thick="S",
    disks_a=[DiskSurgery(target="S")],
    disks_b=[DiskSurgery(target="S")],
)
HANDLEBODY = WeakReductionMove(
    thick="S",
    disks_a=[DiskSurgery(target="S")],
    disks_b=[DiskSurgery(
        target="S",
        kind=DiskKind.SEPARATING,
        left=shape(2, k=1),
        right=shape(2),
    )],
    disks_b_on_s1=[DiskSurgery(
        target="S",
        kind=DiskKind.SEPARATING,
        left=shape(1, k=1),
        right=shape(2),
    )],
    a1_minus={"S": ["R"]},
    b1_minus={"S": ["S.0", "S.1"]},
    a2_minus={"S.0": ["S.0"], "S.1": ["S.1"]},
    b2_minus={"S.0": ["R"], "S.1": []},
)


def test_non_separating_reduction(circular):
    outcome = reduce.run(circular(2, 4), NON_SEPARATING)
    result = outcome.complex
    assert [c.key for c in result.thick] == ["w.S1", "w.S2"]
    assert [c.key for c in result.thin] == ["R", "w.R"]
    assert result.component("w.R").genus == 2
    assert result.body("w.S1", BodyLabel.B).minus_keys() == ("w.R",)
    assert result.body("w.S2", BodyLabel.B).minus_keys() == ("R",)
    assert outcome.record.j_before == outcome.record.j_after == 4
    assert outcome.record.arguments["thick"] == "S"


def test_closed_thin_component_creates_handlebody(circular):
    outcome = reduce.run(circular(2, 4), HANDLEBODY)
    result = census.run(outcome.complex)
    assert result.handle_index == 4
    assert result.handle_number == 6
    assert result.handlebodies == 1
    assert outcome.complex.component("w.R.1").boundary == {}


def test_reduction_then_amalgamation_round_trip(circular):
    start = circular(2, 4)
    reduced = reduce.run(start, NON_SEPARATING).complex
    merged = AmalgamateService().run(reduced, ["w.R"], name="S").complex
    assert merged.component("S").shape() == start.component("S").shape()
    assert merged.thin == start.thin


def test_rename_map(circular):
    move = NON_SEPARATING.model_copy(update={"rename": {"w.R": "R2"}})
    result = reduce.run(circular(2, 4), move).complex
    assert result.component("R2") is not None


def test_maximal_sets_thin_incompressible(circular):
    flagged = assume.run(circular(2, 4), [Assumption.THIN_INCOMPRESSIBLE])
    move = NON_SEPARATING.model_copy(update={"maximal": True})
    assert reduce.run(flagged, move).complex.assumptions == {
        Assumption.THIN_INCOMPRESSIBLE
    }
    assert reduce.run(flagged, NON_SEPARATING).complex.assumptions == set()


def test_refused_under_strong_irreducibility(circular):
    flagged = assume.run(circular(2, 4), [Assumption.STRONGLY_IRREDUCIBLE])
    with pytest.raises(MoveError, match="strongly irreducible"):
        reduce.run(flagged, NON_SEPARATING)


def test_trivial_bodies_have_no_disks(trefoil):
    with pytest.raises(MoveError, match="trivial body"):
        reduce.run(trefoil, NON_SEPARATING)


def test_disconnected_parts_need_partitions(circular):
    move = HANDLEBODY.model_copy(update={"a2_minus": None})
    with pytest.raises(MoveError, match="partition a2 is required"):
        reduce.run(circular(2, 4), move)


def test_partition_must_cover_members_once(circular):
    move = HANDLEBODY.model_copy(
        update={"b2_minus": {"S.0": ["R"], "S.1": ["R"]}}
    )
    with pytest.raises(MoveError, match="exactly once"):
        reduce.run(circular(2, 4), move)


def test_key_clash_is_rejected(circular):
    move = NON_SEPARATING.model_copy(update={"rename": {"w.R": "R"}})
    with pytest.raises(MoveError, match="clash"):
        reduce.run(circular(2, 4), move)


def test_bad_disk_is_reported(circular):
    move = NON_SEPARATING.model_copy(
        update={"disks_a": (DiskSurgery(target="X"),)}
    )
    with pytest.raises(MoveError, match="unknown component 'X'"):
        reduce.run(circular(2, 4), move)
