from collections import Counter
from typing import List

from dtos.compression_body import CompressionBody
from dtos.splitting_complex import Violation
from services.compression_body.abstraction import ICompressionBodyService
from services.compression_body.handles import (
    euler_gap,
    handle_index,
    handle_number,
)


class BodyValidationService(ICompressionBodyService):
    """
    Arithmetic realizability of a connected compression body. Returns the
    failed checks; an empty list means the body is valid.
    """

    def run(self, body: CompressionBody) -> List[Violation]:
        violations: List[Violation] = []
        subject = body.key

        if body.plus.is_sphere:
            violations.append(Violation(
                code="sphere-plus",
                subject=subject,
                message="positive boundary is a sphere",
            ))
        for component in body.minus:
            if component.is_sphere:
                violations.append(Violation(
                    code="sphere-minus",
                    subject=subject,
                    message=f"negative boundary '{component.key}' is a sphere",
                ))
        if len(set(body.minus_keys())) != len(body.minus):
            violations.append(Violation(
                code="duplicate-minus",
                subject=subject,
                message="negative boundary lists a component twice",
            ))

        minus_boundary: Counter = Counter()
        for component in body.minus:
            minus_boundary.update(component.boundary)
        if dict(minus_boundary) != body.plus.boundary:
            violations.append(Violation(
                code="vertical-pairing",
                subject=subject,
                message=(
                    f"vertical pairing: positive boundary circles "
                    f"{body.plus.boundary} do not match negative boundary "
                    f"circles {dict(minus_boundary)}"
                ),
            ))
        pairing = {
            suture: count for suture, count in body.pairing.items() if count
        }
        if pairing != body.plus.boundary:
            violations.append(Violation(
                code="vertical-pairing",
                subject=subject,
                message=(
                    f"vertical pairing {pairing} does not cover positive "
                    f"boundary circles {body.plus.boundary}"
                ),
            ))

        gap = euler_gap(body)
        if gap % 2:
            violations.append(Violation(
                code="parity",
                subject=subject,
                message=f"euler gap {gap} is odd",
            ))
            return violations

        h, j = handle_number(body), handle_index(body)
        if h < 0:
            violations.append(Violation(
                code="negative-handle-number",
                subject=subject,
                message=f"handle number {h} is negative",
            ))
        if j < 0:
            violations.append(Violation(
                code="negative-handle-index",
                subject=subject,
                message=f"handle index {j} is negative",
            ))
        return violations
