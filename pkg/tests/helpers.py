"""
Small builders shared by the test modules.
"""
from typing import Iterable

from constants.topology import BodyLabel
from dtos.compression_body import CompressionBody
from dtos.surface import Shape, SurfaceComponent
from services.compression_body.factory import body_of


def piece(key: str, genus: int, **boundary: int) -> SurfaceComponent:
    return SurfaceComponent(key=key, genus=genus, boundary=boundary)


def shape(genus: int, **boundary: int) -> Shape:
    return Shape(genus=genus, boundary=boundary)


def body(
    label: str,
    plus: SurfaceComponent,
    minus: Iterable[SurfaceComponent] = (),
) -> CompressionBody:
    return body_of(BodyLabel(label), plus, minus)
