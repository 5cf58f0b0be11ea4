"""
Helpers shared by the moves for swapping surface data inside a complex.
"""
from typing import Dict, Iterable, Set

from dtos.compression_body import CompressionBody
from dtos.splitting_complex import SplittingComplex
from dtos.surface import SurfaceComponent


def swap(
    components: Iterable[SurfaceComponent],
    updated: Dict[str, SurfaceComponent],
) -> tuple:
    return tuple(updated.get(component.key, component) for component in components)


def refresh(
    complex_: SplittingComplex,
    updated: Dict[str, SurfaceComponent],
) -> SplittingComplex:
    """
    Replace components by key everywhere they occur, bodies included.
    """
    bodies = tuple(
        body.model_copy(update={
            "plus": updated.get(body.plus.key, body.plus),
            "minus": swap(body.minus, updated),
        })
        for body in complex_.bodies
    )
    return complex_.model_copy(update={
        "thin": swap(complex_.thin, updated),
        "thick": swap(complex_.thick, updated),
        "boundary_plus": swap(complex_.boundary_plus, updated),
        "boundary_minus": swap(complex_.boundary_minus, updated),
        "bodies": bodies,
    })


def drop_keys(
    components: Iterable[SurfaceComponent],
    keys: Set[str],
) -> list:
    return [component for component in components if component.key not in keys]


def other_bodies(
    complex_: SplittingComplex,
    removed: Iterable[CompressionBody],
) -> list:
    keys = {body.key for body in removed}
    return [body for body in complex_.bodies if body.key not in keys]
