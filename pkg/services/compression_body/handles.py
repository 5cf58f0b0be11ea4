"""
Handle number and handle index of connected compression bodies.

h(W) = g(+) - g(-) + |#(-) - 1| counts 0- and 1-handles, and
j(W) = (chi(-) - chi(+)) / 2 is #1-handles minus #0-handles, so
h = j for bodies with negative boundary and h = j + 2 for handlebodies.
"""
from typing import Iterable

from dtos.compression_body import CompressionBody
from errors.compression_body import BodyError
from services.compression_body.abstraction import ICompressionBodyService


def handle_number(body: CompressionBody) -> int:
    minus_genus = sum(component.genus for component in body.minus)
    return body.plus.genus - minus_genus + abs(len(body.minus) - 1)


def euler_gap(body: CompressionBody) -> int:
    minus = sum(component.euler_char for component in body.minus)
    return minus - body.plus.euler_char


def handle_index(body: CompressionBody) -> int:
    gap = euler_gap(body)
    if gap % 2:
        raise BodyError(
            f"body {body.key} has odd euler gap {gap}",
            details={"body": body.key},
        )
    return gap // 2


def is_handlebody(body: CompressionBody) -> bool:
    return not body.minus


def is_trivial(body: CompressionBody) -> bool:
    return len(body.minus) == 1 and body.plus.genus == body.minus[0].genus


def total_handle_number(bodies: Iterable[CompressionBody]) -> int:
    return sum(handle_number(body) for body in bodies)


def total_handle_index(bodies: Iterable[CompressionBody]) -> int:
    return sum(handle_index(body) for body in bodies)


class HandleNumberService(ICompressionBodyService):
    """
    Minimal number of 0- and 1-handles of a connected body.
    """

    def run(self, body: CompressionBody) -> int:
        value = handle_number(body)
        if value < 0:
            raise BodyError(
                f"body {body.key} has negative handle number {value}",
                details={"body": body.key, "h": value},
            )
        return value


class HandleIndexService(ICompressionBodyService):
    """
    #1-handles minus #0-handles of a connected body.
    """

    def run(self, body: CompressionBody) -> int:
        value = handle_index(body)
        if value < 0:
            raise BodyError(
                f"body {body.key} has negative handle index {value}",
                details={"body": body.key, "j": value},
            )
        return value
