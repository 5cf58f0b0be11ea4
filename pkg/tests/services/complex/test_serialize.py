import pytest
from pydantic import ValidationError

from constants.topology import Assumption
from dtos.moves import WeakReductionMove
from dtos.surface import DiskSurgery, SurfaceComponent, Suture
from errors.splitting_complex import ComplexParseError
from services.complex.assume import AssumeService
from services.complex.deserialize import DeserializeComplexService
from services.complex.serialize import SerializeComplexService
from services.moves.weak_reduce import WeakReduceService

serialize = SerializeComplexService()
deserialize = DeserializeComplexService()


def test_circular_text(circular):
    assert serialize.run(circular(1, 2)) == (
        "SUTURES\n"
        "k|toroidal\n"
        "SURFACES\n"
        "R|thin|1|k:1|-\n"
        "S|thick|2|k:1|-\n"
        "BODIES\n"
        "S|A|k:1\n"
        "S|B|k:1\n"
        "INCIDENCE\n"
        "S|A|R\n"
        "S|B|R\n"
        "ASSUMPTIONS\n"
    )


def test_fixture_matches_construction(complexes, circular, fixtures_dir):
    text = (fixtures_dir / "circular_1_2.ghs").read_text()
    assert complexes.get("circular_1_2") == circular(1, 2)
    assert serialize.run(circular(1, 2)) == text


def test_assumptions_survive(circular):
    flagged = AssumeService().run(
        circular(2, 3),
        [Assumption.STRONGLY_IRREDUCIBLE, Assumption.LOCALLY_THIN],
    )
    text = serialize.run(flagged)
    assert text.endswith("ASSUMPTIONS\nlocally_thin\nstrongly_irreducible\n")
    assert deserialize.run(text) == flagged


def test_comments_and_blank_lines_are_ignored(circular):
    text = "# header\n\n" + serialize.run(circular(1, 2)).replace(
        "k|toroidal", "k|toroidal   # the knot"
    )
    assert deserialize.run(text) == circular(1, 2)


@pytest.mark.parametrize(
    "old, new, message",
    [
        ("R|thin|1|k:1|-", "R|thin|1|q:1|-", "unknown suture 'q'"),
        ("R|thin|1|k:1|-", "R|thin|1|k:1|-\nR|thin|1|k:1|-", "duplicate id"),
        ("R|thin|1|k:1|-", "R|lens|1|k:1|-", "unknown role"),
        ("R|thin|1|k:1|-", "R|thin|x|k:1|-", "not an integer"),
        ("S|A|k:1\n", "S|C|k:1\n", "unknown body label"),
        ("S|A|R", "S|A|Q", "unknown surface 'Q'"),
        ("S|B|R\n", "", "has no incidence line"),
        ("SUTURES\n", "k|toroidal\nSUTURES\n", "before the first section"),
        ("ASSUMPTIONS\n", "ASSUMPTIONS\nlucky\n", "unknown assumption"),
        ("ASSUMPTIONS\n", "ASSUMPTIONS\nSUTURES\n", "repeated"),
        ("k|toroidal", "k|toroidal|x", "needs 2 fields"),
    ],
)
def test_parse_errors(circular, old, new, message):
    text = serialize.run(circular(1, 2)).replace(old, new, 1)
    with pytest.raises(ComplexParseError, match=message):
        deserialize.run(text)


def test_parse_error_reports_line_and_field(circular):
    text = serialize.run(circular(1, 2)).replace("k:1|-", "q:1|-", 1)
    with pytest.raises(ComplexParseError) as error:
        deserialize.run(text)
    assert error.value.line == 4
    assert error.value.field == "boundary"


def test_reduced_complex_round_trips_with_decorated_label(circular):
    move = WeakReductionMove(
        thick="S",
        disks_a=[DiskSurgery(target="S")],
        disks_b=[DiskSurgery(target="S")],
        label="w~1+x",
    )
    reduced = WeakReduceService().run(circular(2, 4), move).complex
    assert reduced.component("w~1+x.R") is not None
    assert deserialize.run(serialize.run(reduced)) == reduced


@pytest.mark.parametrize("key", ["w#1.S1", "a|b", "k:1", "a,b", "-", "-a", ""])
def test_keys_cannot_hold_format_tokens(key):
    with pytest.raises(ValidationError):
        SurfaceComponent(key=key, genus=1, boundary={"k": 1})
    with pytest.raises(ValidationError):
        Suture(id=key)


def test_reduction_label_cannot_hold_format_tokens():
    with pytest.raises(ValidationError):
        WeakReductionMove(
            thick="S",
            disks_a=[DiskSurgery(target="S")],
            disks_b=[DiskSurgery(target="S")],
            label="w#1",
        )
