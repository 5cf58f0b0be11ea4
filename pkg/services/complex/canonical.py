"""
Canonical ordering of splitting complexes. Every builder and move returns
canonical complexes so equality and serialization are order independent.
"""
from typing import Dict, Iterable

from constants.topology import Assumption
from dtos.compression_body import CompressionBody
from dtos.splitting_complex import SplittingComplex
from dtos.surface import SurfaceComponent, Suture


def by_key(components: Iterable[SurfaceComponent]):
    return tuple(sorted(components, key=lambda component: component.key))


def canonical_body(body: CompressionBody) -> CompressionBody:
    return body.model_copy(update={
        "minus": by_key(body.minus),
        "pairing": {
            suture: body.pairing[suture]
            for suture in sorted(body.pairing)
            if body.pairing[suture]
        },
    })


def assemble(
    sutures: Iterable[Suture],
    thin: Iterable[SurfaceComponent],
    thick: Iterable[SurfaceComponent],
    bodies: Iterable[CompressionBody],
    boundary_plus: Iterable[SurfaceComponent] = (),
    boundary_minus: Iterable[SurfaceComponent] = (),
    assumptions: Iterable[Assumption] = (),
) -> SplittingComplex:
    return SplittingComplex(
        sutures=tuple(sorted(sutures, key=lambda suture: suture.id)),
        thin=by_key(thin),
        thick=by_key(thick),
        boundary_plus=by_key(boundary_plus),
        boundary_minus=by_key(boundary_minus),
        bodies=tuple(sorted(
            (canonical_body(body) for body in bodies),
            key=lambda body: (body.plus.key, body.label.value),
        )),
        assumptions=frozenset(assumptions),
    )


def canonical(complex_: SplittingComplex) -> SplittingComplex:
    return assemble(
        sutures=complex_.sutures,
        thin=complex_.thin,
        thick=complex_.thick,
        bodies=complex_.bodies,
        boundary_plus=complex_.boundary_plus,
        boundary_minus=complex_.boundary_minus,
        assumptions=complex_.assumptions,
    )


def surface_index(complex_: SplittingComplex) -> Dict[str, SurfaceComponent]:
    return {component.key: component for component in complex_.components()}
