from dtos.surface import Surface
from services.surface.abstraction import ISurfaceService


class EulerCharacteristicService(ISurfaceService):
    """
    Euler characteristic of a formal union of surface components.
    """

    def run(self, surface: Surface) -> int:
        return sum(component.euler_char for component in surface.components)
