import re
from collections import Counter
from typing import Iterable, Optional

from constants.topology import BodyLabel, Topology
from dtos.moves import MoveOutcome
from dtos.splitting_complex import SplittingComplex
from dtos.surface import SurfaceComponent
from services.complex.assume import without_flags
from services.compression_body.factory import body_of
from services.moves.abstraction import IMoveService
from services.moves.rewire import drop_keys, other_bodies


class AmalgamateService(IMoveService):
    """
    Merge the splittings on both sides of a set of thin components R into
    one. The B-body B1 over S1 and the A-body A2 over S2 must meet exactly
    along R; S1 and S2 are replaced by a connected thick surface S' with

        chi(S') = chi(S1) + chi(S2) - chi(R)
        b(S')   = b(S1) + b(S2) - b(R)        (per suture)

    The new A-body keeps the negative boundary of A1 and what A2 met
    besides R; the new B-body keeps B2 and what B1 met besides R. The
    handle index is unchanged.
    """

    kind = "amalgamate"

    def run(
        self,
        complex_: SplittingComplex,
        thin: Iterable[str],
        name: Optional[str] = None,
    ) -> MoveOutcome:
        thin_keys = sorted(set(thin))
        if not thin_keys:
            raise self.fail("nothing to amalgamate along")
        if name is not None and not re.fullmatch(Topology.KEY_PATTERN, name):
            raise self.fail(f"'{name}' is not a valid key", name=name)
        surfaces = []
        for key in thin_keys:
            component = complex_.component(key)
            if component is None or component not in complex_.thin:
                raise self.fail(f"'{key}' is not a thin surface", thin=key)
            surfaces.append(component)

        b_bodies = complex_.bodies_meeting(thin_keys[0], BodyLabel.B)
        a_bodies = complex_.bodies_meeting(thin_keys[0], BodyLabel.A)
        if len(b_bodies) != 1 or len(a_bodies) != 1:
            raise self.fail(f"'{thin_keys[0]}' is not between two bodies")
        below, above = b_bodies[0], a_bodies[0]
        common = set(below.minus_keys()) & set(above.minus_keys())
        if common != set(thin_keys):
            raise self.fail(
                f"bodies {below.key} and {above.key} meet along "
                f"{sorted(common)}, not {thin_keys}",
                thin=thin_keys,
            )
        first, second = below.plus, above.plus
        if first.key == second.key:
            raise self.fail(
                f"'{first.key}' would be amalgamated with itself",
                thin=thin_keys,
            )
        outer_a = complex_.body(first.key, BodyLabel.A)
        outer_b = complex_.body(second.key, BodyLabel.B)
        if outer_a is None or outer_b is None:
            raise self.fail("thick surfaces are missing their outer bodies")

        merged = self._merge(first, second, surfaces, name)
        clashes = {item.key for item in complex_.components()}
        clashes -= {first.key, second.key, *thin_keys}
        if merged.key in clashes:
            raise self.fail(f"duplicate id '{merged.key}'")

        new_a = body_of(
            BodyLabel.A,
            merged,
            [*outer_a.minus, *drop_keys(above.minus, set(thin_keys))],
        )
        new_b = body_of(
            BodyLabel.B,
            merged,
            [*outer_b.minus, *drop_keys(below.minus, set(thin_keys))],
        )
        result = complex_.model_copy(update={
            "thin": tuple(drop_keys(complex_.thin, set(thin_keys))),
            "thick": (
                *drop_keys(complex_.thick, {first.key, second.key}),
                merged,
            ),
            "bodies": (
                *other_bodies(complex_, [below, above, outer_a, outer_b]),
                new_a,
                new_b,
            ),
        })
        arguments = {"thin": thin_keys}
        if name is not None:
            arguments["name"] = name
        return self.outcome(complex_, without_flags(result), arguments)

    def _merge(
        self,
        first: SurfaceComponent,
        second: SurfaceComponent,
        thin: list,
        name: Optional[str],
    ) -> SurfaceComponent:
        euler = first.euler_char + second.euler_char
        euler -= sum(component.euler_char for component in thin)
        boundary = Counter(first.boundary) + Counter(second.boundary)
        for component in thin:
            for suture, circles in component.boundary.items():
                boundary[suture] -= circles
        if any(circles < 0 for circles in boundary.values()):
            raise self.fail(
                f"thin surface has more circles than {first.key} and "
                f"{second.key} together"
            )
        circles = sum(boundary.values())
        doubled_genus = 2 - euler - circles
        if doubled_genus < 0 or doubled_genus % 2:
            raise self.fail(
                f"no connected surface has euler characteristic {euler} "
                f"and {circles} boundary circles"
            )
        merged = SurfaceComponent(
            key=name or f"{first.key}+{second.key}",
            genus=doubled_genus // 2,
            boundary=dict(boundary),
        )
        if merged.is_sphere:
            raise self.fail("amalgamated surface is a sphere")
        self.logger.debug(
            f"amalgamated {first.key} and {second.key} into {merged.key} "
            f"(genus {merged.genus}, boundary {merged.boundary})"
        )
        return merged
