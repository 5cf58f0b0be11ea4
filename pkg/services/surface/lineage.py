from typing import Dict, Iterable, List, Tuple

from dtos.surface import SurfaceComponent, SurgeryResult, Surface


def identity_lineage(surface: Surface) -> Dict[str, Tuple[str, ...]]:
    return {key: (key,) for key in surface.keys()}


def compose_lineage(
    lineage: Dict[str, Tuple[str, ...]],
    step: Dict[str, Tuple[str, ...]],
) -> Dict[str, Tuple[str, ...]]:
    """
    Follow every key of `lineage` through one more surgery step.
    """
    composed: Dict[str, Tuple[str, ...]] = {}
    for origin, keys in lineage.items():
        followed: List[str] = []
        for key in keys:
            followed.extend(step.get(key, (key,)))
        composed[origin] = tuple(followed)
    return composed


def replace_component(
    surface: Surface,
    target: str,
    replacements: Iterable[SurfaceComponent],
) -> Surface:
    """
    Replace the component `target` in place, keeping component order.
    """
    components: List[SurfaceComponent] = []
    for component in surface.components:
        if component.key == target:
            components.extend(replacements)
        else:
            components.append(component)
    return Surface(components=tuple(components))


def result_of(
    surface: Surface,
    target: str,
    replacements: List[SurfaceComponent],
) -> SurgeryResult:
    lineage = identity_lineage(surface)
    lineage[target] = tuple(component.key for component in replacements)
    return SurgeryResult(
        surface=replace_component(surface, target, replacements),
        lineage=lineage,
    )
