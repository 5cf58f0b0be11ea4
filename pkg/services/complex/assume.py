from typing import Iterable

from constants.topology import Assumption
from dtos.splitting_complex import SplittingComplex
from services.complex.abstraction import IComplexService

from start_utils import logger

STRONG_FLAGS = frozenset({
    Assumption.LOCALLY_THIN,
    Assumption.STRONGLY_IRREDUCIBLE,
})


def is_locally_thin(complex_: SplittingComplex) -> bool:
    flags = complex_.assumptions
    return Assumption.LOCALLY_THIN in flags or {
        Assumption.THIN_INCOMPRESSIBLE,
        Assumption.STRONGLY_IRREDUCIBLE,
    } <= flags


def without_flags(
    complex_: SplittingComplex,
    flags: Iterable[Assumption] = STRONG_FLAGS,
) -> SplittingComplex:
    return complex_.model_copy(
        update={"assumptions": complex_.assumptions - frozenset(flags)}
    )


class AssumeService(IComplexService):
    """
    Record caller-asserted geometric facts on a complex. The flags are not
    verified; moves consume them as preconditions.
    """

    def __init__(self) -> None:
        super().__init__()
        self.logger = logger

    def run(
        self,
        complex_: SplittingComplex,
        flags: Iterable[Assumption],
    ) -> SplittingComplex:
        added = frozenset(flags)
        self.logger.debug(
            f"assuming {sorted(flag.value for flag in added)}"
        )
        return complex_.model_copy(
            update={"assumptions": complex_.assumptions | added}
        )
