from typing import Iterable

from constants.topology import BodyLabel
from dtos.compression_body import CompressionBody
from dtos.surface import SurfaceComponent
from errors.compression_body import BodyError
from services.compression_body.abstraction import ICompressionBodyService
from services.compression_body.validation import BodyValidationService

from start_utils import logger


class BodyFactoryService(ICompressionBodyService):
    """
    Build a connected compression body whose vertical pairing is read off
    its positive boundary, rejecting unrealizable data.
    """

    def __init__(self) -> None:
        super().__init__()
        self.logger = logger
        self.validator = BodyValidationService()

    def run(
        self,
        label: BodyLabel,
        plus: SurfaceComponent,
        minus: Iterable[SurfaceComponent] = (),
    ) -> CompressionBody:
        body = body_of(label, plus, minus)
        violations = self.validator.run(body)
        if violations:
            raise BodyError(
                f"body {body.key} is not realizable: "
                + "; ".join(str(violation) for violation in violations),
                details={"violations": [v.code for v in violations]},
            )
        return body


def body_of(
    label: BodyLabel,
    plus: SurfaceComponent,
    minus: Iterable[SurfaceComponent] = (),
) -> CompressionBody:
    """
    Unchecked body with the vertical pairing read off `plus`.
    """
    return CompressionBody(
        label=label,
        plus=plus,
        minus=tuple(sorted(minus, key=lambda component: component.key)),
        pairing=dict(plus.boundary),
    )
