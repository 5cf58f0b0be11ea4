from constants.topology import BodyLabel
from dtos.moves import MoveOutcome
from dtos.splitting_complex import SplittingComplex
from services.complex.assume import without_flags
from services.moves.abstraction import IMoveService
from services.moves.rewire import refresh


class StabilizeService(IMoveService):
    """
    Add a cancelling handle pair to a thick surface: its genus goes up by
    one and each incident body gains one handle, so the handle index of
    the complex rises by exactly 2.
    """

    kind = "stabilize"
    delta = 1

    def run(self, complex_: SplittingComplex, thick: str) -> MoveOutcome:
        component = complex_.component(thick)
        if component is None or component not in complex_.thick:
            raise self.fail(f"'{thick}' is not a thick surface", thick=thick)
        for label in BodyLabel:
            if complex_.body(thick, label) is None:
                raise self.fail(f"'{thick}' has no {label.value}-body")
        if component.genus + self.delta < 0:
            raise self.fail(f"'{thick}' has genus 0", thick=thick)

        changed = component.model_copy(
            update={"genus": component.genus + self.delta}
        )
        if changed.is_sphere:
            raise self.fail(f"'{thick}' would become a sphere", thick=thick)
        result = without_flags(refresh(complex_, {thick: changed}))
        return self.outcome(complex_, result, {"thick": thick})


class DestabilizeService(StabilizeService):
    """
    Cancel a handle pair of a thick surface known to be stabilized. The
    caller asserts the geometry; only arithmetic validity is checked.
    """

    kind = "destabilize"
    delta = -1
