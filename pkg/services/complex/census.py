from constants.topology import SutureKind
from dtos.splitting_complex import Census, SplittingComplex
from services.complex.abstraction import IComplexService
from services.compression_body.handles import (
    is_handlebody,
    is_trivial,
    total_handle_index,
    total_handle_number,
)


class CensusService(IComplexService):
    """
    Body census with total handle number and handle index of a valid
    complex.
    """

    def run(self, complex_: SplittingComplex) -> Census:
        return Census(
            bodies=len(complex_.bodies),
            trivial=sum(1 for body in complex_.bodies if is_trivial(body)),
            handlebodies=sum(
                1 for body in complex_.bodies if is_handlebody(body)
            ),
            handle_number=total_handle_number(complex_.bodies),
            handle_index=total_handle_index(complex_.bodies),
        )


def handle_number_of(complex_: SplittingComplex) -> int:
    return total_handle_number(complex_.bodies)


def handle_index_of(complex_: SplittingComplex) -> int:
    return total_handle_index(complex_.bodies)


def has_handlebody(complex_: SplittingComplex) -> bool:
    return any(is_handlebody(body) for body in complex_.bodies)


def is_fibration(complex_: SplittingComplex) -> bool:
    return all(is_trivial(body) for body in complex_.bodies)


def is_circular(complex_: SplittingComplex) -> bool:
    """
    A knot-exterior splitting: a single toroidal suture carrying every
    circle and empty R+ and R-.
    """
    if len(complex_.sutures) != 1 or complex_.boundary_plus:
        return False
    if complex_.boundary_minus:
        return False
    suture = complex_.sutures[0]
    if suture.kind != SutureKind.TOROIDAL:
        return False
    return all(
        set(component.boundary) <= {suture.id}
        for component in (*complex_.thin, *complex_.thick)
    )
