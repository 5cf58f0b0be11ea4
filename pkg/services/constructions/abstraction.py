from abstractions.service import IService
from dtos.splitting_complex import SplittingComplex
from errors.constructions import ConstructionError
from services.complex.canonical import canonical
from services.complex.validate import ComplexValidationService

from start_utils import logger


class IConstructionService(IService):
    """
    Interface for deterministic complex builders.
    """

    def __init__(self) -> None:
        super().__init__()
        self.logger = logger
        self.validator = ComplexValidationService()

    def checked(self, complex_: SplittingComplex) -> SplittingComplex:
        complex_ = canonical(complex_)
        violations = self.validator.run(complex_)
        if violations:
            raise ConstructionError(
                f"{type(self).__name__} built an invalid complex: "
                + "; ".join(str(violation) for violation in violations),
                details={"violations": [v.code for v in violations]},
            )
        return complex_
