from typing import Any, Dict

from abstractions.service import IService
from dtos.moves import MoveOutcome, MoveRecord
from dtos.splitting_complex import SplittingComplex
from errors.compression_body import BodyError
from errors.moves import MoveError
from services.complex.canonical import canonical
from services.complex.census import handle_index_of, handle_number_of
from services.complex.validate import ComplexValidationService

from start_utils import logger


class IMoveService(IService):
    """
    Interface for rewrite moves. Every move returns a fresh, validated,
    canonical complex together with its provenance record.
    """

    kind: str = "move"

    def __init__(self) -> None:
        super().__init__()
        self.logger = logger
        self.validator = ComplexValidationService()

    def fail(self, message: str, **details: Any) -> MoveError:
        return MoveError(self.kind, message, details=details)

    def outcome(
        self,
        before: SplittingComplex,
        after: SplittingComplex,
        arguments: Dict[str, Any],
    ) -> MoveOutcome:
        after = canonical(after)
        violations = self.validator.run(after)
        if violations:
            raise self.fail(
                "result is not a valid complex: "
                + "; ".join(str(violation) for violation in violations),
                violations=[violation.code for violation in violations],
            )
        try:
            record = MoveRecord(
                kind=self.kind,
                arguments=arguments,
                h_before=handle_number_of(before),
                h_after=handle_number_of(after),
                j_before=handle_index_of(before),
                j_after=handle_index_of(after),
            )
        except BodyError as error:
            raise self.fail(error.message) from error
        self.logger.debug(
            f"{self.kind}: h {record.h_before} -> {record.h_after}, "
            f"j {record.j_before} -> {record.j_after}"
        )
        return MoveOutcome(complex=after, record=record)
