import pytest

from constants.topology import BodyLabel
from errors.compression_body import BodyError
from services.compression_body.factory import BodyFactoryService
from services.compression_body.validation import BodyValidationService
from tests.helpers import body, piece

validator = BodyValidationService()


def codes(node):
    return [violation.code for violation in validator.run(node)]


def test_valid_body_has_no_violations():
    assert codes(body("A", piece("S", 2, k=1), [piece("R", 1, k=1)])) == []


@pytest.mark.parametrize(
    "plus, minus, code",
    [
        (piece("S", 0), [], "sphere-plus"),
        (piece("S", 1), [piece("R", 0)], "sphere-minus"),
        (piece("S", 2, k=1), [piece("R", 1, c=1)], "vertical-pairing"),
        (piece("S", 1, k=1), [piece("R", 1, k=1), piece("R", 1)], "duplicate-minus"),
        (piece("S", 1, k=1), [piece("R", 2, k=1)], "negative-handle-index"),
    ],
)
def test_violations(plus, minus, code):
    assert code in codes(body("A", plus, minus))


def test_parity_stops_further_checks():
    found = codes(body("A", piece("S", 2), [piece("R", 0, k=1)]))
    assert "parity" in found
    assert "negative-handle-index" not in found


def test_factory_raises_on_unrealizable_body():
    with pytest.raises(BodyError, match="not realizable") as error:
        BodyFactoryService().run(
            BodyLabel.A,
            piece("S", 1, k=1),
            [piece("R", 2, k=1)],
        )
    assert "negative-handle-index" in error.value.details["violations"]


def test_factory_reads_pairing_off_positive_boundary():
    node = BodyFactoryService().run(
        BodyLabel.B,
        piece("S", 2, k=2),
        [piece("R", 1, k=1), piece("Q", 0, k=1)],
    )
    assert node.pairing == {"k": 2}
    assert node.minus_keys() == ("Q", "R")
