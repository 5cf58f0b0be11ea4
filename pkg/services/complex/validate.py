from collections import Counter
from typing import Dict, List

from constants.topology import BodyLabel, SurfaceRole
from dtos.splitting_complex import SplittingComplex, Violation
from services.complex.abstraction import IComplexService
from services.compression_body.validation import BodyValidationService

from start_utils import logger

ALLOWED_MINUS: Dict[BodyLabel, tuple] = {
    BodyLabel.A: (SurfaceRole.THIN, SurfaceRole.MINUS),
    BodyLabel.B: (SurfaceRole.THIN, SurfaceRole.PLUS),
}


class ComplexValidationService(IComplexService):
    """
    Check a splitting complex against the incidence rules of a generalized
    Heegaard splitting. Never raises: every failed check is reported as a
    Violation and an empty list means the complex is valid.
    """

    def __init__(self) -> None:
        super().__init__()
        self.logger = logger
        self.body_validator = BodyValidationService()

    def run(self, complex_: SplittingComplex) -> List[Violation]:
        violations: List[Violation] = []
        violations.extend(self._check_ids(complex_))
        violations.extend(self._check_surfaces(complex_))
        violations.extend(self._check_bodies(complex_))
        violations.extend(self._check_incidence(complex_))
        self.logger.debug(f"validation found {len(violations)} violations")
        return violations

    def is_valid(self, complex_: SplittingComplex) -> bool:
        return not self.run(complex_)

    def _check_ids(self, complex_: SplittingComplex) -> List[Violation]:
        violations: List[Violation] = []
        suture_ids = Counter(suture.id for suture in complex_.sutures)
        for suture_id, count in sorted(suture_ids.items()):
            if count > 1:
                violations.append(Violation(
                    code="duplicate-id",
                    subject=suture_id,
                    message=f"suture id used {count} times",
                ))
        keys = Counter(component.key for component in complex_.components())
        for key, count in sorted(keys.items()):
            if count > 1:
                violations.append(Violation(
                    code="duplicate-id",
                    subject=key,
                    message=f"surface id used {count} times",
                ))
        bodies = Counter(body.key for body in complex_.bodies)
        for key, count in sorted(bodies.items()):
            if count > 1:
                violations.append(Violation(
                    code="duplicate-body",
                    subject=key,
                    message=f"body listed {count} times",
                ))
        return violations

    def _check_surfaces(self, complex_: SplittingComplex) -> List[Violation]:
        violations: List[Violation] = []
        suture_ids = {suture.id for suture in complex_.sutures}
        for component in complex_.components():
            if component.is_sphere:
                violations.append(Violation(
                    code="sphere",
                    subject=component.key,
                    message="surface component is a sphere",
                ))
            for suture in component.boundary:
                if suture not in suture_ids:
                    violations.append(Violation(
                        code="unknown-suture",
                        subject=component.key,
                        message=f"boundary on unknown suture '{suture}'",
                    ))
        return violations

    def _check_bodies(self, complex_: SplittingComplex) -> List[Violation]:
        violations: List[Violation] = []
        for body in complex_.bodies:
            violations.extend(self.body_validator.run(body))

            if complex_.role_of(body.plus.key) != SurfaceRole.THICK:
                violations.append(Violation(
                    code="plus-not-thick",
                    subject=body.key,
                    message=f"positive boundary '{body.plus.key}' is not thick",
                ))
            elif complex_.component(body.plus.key) != body.plus:
                violations.append(Violation(
                    code="stale-surface",
                    subject=body.key,
                    message=f"data of '{body.plus.key}' differs from complex",
                ))

            for component in body.minus:
                role = complex_.role_of(component.key)
                if role is None:
                    violations.append(Violation(
                        code="unknown-surface",
                        subject=body.key,
                        message=f"negative boundary '{component.key}' unknown",
                    ))
                    continue
                if role not in ALLOWED_MINUS[body.label]:
                    violations.append(Violation(
                        code="minus-role",
                        subject=body.key,
                        message=(
                            f"{body.label.value}-body cannot have {role.value} "
                            f"surface '{component.key}' in its negative "
                            f"boundary"
                        ),
                    ))
                if complex_.component(component.key) != component:
                    violations.append(Violation(
                        code="stale-surface",
                        subject=body.key,
                        message=f"data of '{component.key}' differs from complex",
                    ))
        return violations

    def _check_incidence(self, complex_: SplittingComplex) -> List[Violation]:
        violations: List[Violation] = []
        for component in complex_.thick:
            labels = Counter(
                body.label for body in complex_.bodies
                if body.plus.key == component.key
            )
            if labels[BodyLabel.A] != 1 or labels[BodyLabel.B] != 1:
                violations.append(Violation(
                    code="thick-bodies",
                    subject=component.key,
                    message=(
                        f"thick needs one A and one B, found "
                        f"{labels[BodyLabel.A]} A and {labels[BodyLabel.B]} B"
                    ),
                ))
        for component in complex_.thin:
            a_count = len(complex_.bodies_meeting(component.key, BodyLabel.A))
            b_count = len(complex_.bodies_meeting(component.key, BodyLabel.B))
            if a_count != 1 or b_count != 1:
                violations.append(Violation(
                    code="thin-bodies",
                    subject=component.key,
                    message=(
                        f"thin needs one A and one B, found {a_count} A "
                        f"and {b_count} B"
                    ),
                ))
        for component in complex_.boundary_minus:
            count = len(complex_.bodies_meeting(component.key, BodyLabel.A))
            if count != 1:
                violations.append(Violation(
                    code="boundary-bodies",
                    subject=component.key,
                    message=f"R- component needs one A-body, found {count}",
                ))
        for component in complex_.boundary_plus:
            count = len(complex_.bodies_meeting(component.key, BodyLabel.B))
            if count != 1:
                violations.append(Violation(
                    code="boundary-bodies",
                    subject=component.key,
                    message=f"R+ component needs one B-body, found {count}",
                ))
        return violations
