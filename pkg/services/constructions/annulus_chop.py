from collections import Counter
from typing import Dict, List, Set

from constants.topology import SurfaceRole
from dtos.compression_body import CompressionBody
from dtos.moves import ChopMove, ChopResult, RectanglePlan
from dtos.splitting_complex import SplittingComplex
from dtos.surface import Surface, SurfaceComponent
from errors.constructions import ConstructionError
from errors.surface import SurgeryError
from services.complex.assume import is_locally_thin
from services.complex.canonical import assemble
from services.complex.census import handle_index_of
from services.compression_body.factory import body_of
from services.constructions.abstraction import IConstructionService
from services.surface.arc_surgery import ArcSurgeryService

Lineage = Dict[str, List[SurfaceComponent]]


class AnnulusChopService(IConstructionService):
    """
    Chop a locally thin complex along an annulus Q positioned to meet
    every compression body in vertical rectangles. Each rectangle has its
    top arc on the positive boundary and its bottom arc on the negative
    boundary, so cutting a body along it raises chi of both boundaries by
    one and leaves the handle index unchanged.

    The caller describes where Q cuts every surface (arcs), how the bodies
    fall apart (rectangles) and which surfaces form each resulting piece.
    """

    def __init__(self) -> None:
        super().__init__()
        self.arc_surgery = ArcSurgeryService()

    def run(self, complex_: SplittingComplex, move: ChopMove) -> ChopResult:
        if not is_locally_thin(complex_):
            raise ConstructionError(
                "annulus chop needs a complex asserted locally thin"
            )
        sutures = [*complex_.sutures, *move.new_sutures]
        if len({suture.id for suture in sutures}) != len(sutures):
            raise ConstructionError("new sutures reuse an existing id")

        lineage = self._cut_surfaces(complex_, move)
        arc_counts = Counter({key: len(arcs) for key, arcs in move.arcs.items()})

        unknown = set(move.rectangles) - {body.key for body in complex_.bodies}
        if unknown:
            raise ConstructionError(
                f"rectangle plans for unknown bodies {sorted(unknown)}"
            )
        bodies: List[CompressionBody] = []
        for body in complex_.bodies:
            plan = move.rectangles.get(body.key, RectanglePlan(count=0))
            self._check_ledger(body, plan, arc_counts)
            bodies.extend(self._split_body(body, plan, lineage))

        roles: Dict[SurfaceRole, List[SurfaceComponent]] = {
            role: [] for role in SurfaceRole
        }
        for role, components in complex_.role_map().items():
            for component in components:
                roles[role].extend(lineage[component.key])

        chopped = self.checked(assemble(
            sutures=sutures,
            thin=roles[SurfaceRole.THIN],
            thick=roles[SurfaceRole.THICK],
            bodies=bodies,
            boundary_plus=roles[SurfaceRole.PLUS],
            boundary_minus=roles[SurfaceRole.MINUS],
            assumptions=complex_.assumptions,
        ))
        before, after = handle_index_of(complex_), handle_index_of(chopped)
        if before != after:
            raise ConstructionError(
                f"chop changed the handle index from {before} to {after}"
            )

        pieces = {
            label: self._piece(chopped, set(keys), label)
            for label, keys in move.pieces.items()
        }
        claimed = Counter(key for keys in move.pieces.values() for key in keys)
        repeated = sorted(key for key, seen in claimed.items() if seen > 1)
        if repeated:
            raise ConstructionError(f"surfaces {repeated} in several pieces")
        self.logger.debug(
            f"chopped along {sum(arc_counts.values())} arcs into "
            f"{len(pieces)} pieces"
        )
        return ChopResult(complex=chopped, pieces=pieces)

    def _cut_surfaces(
        self,
        complex_: SplittingComplex,
        move: ChopMove,
    ) -> Lineage:
        for key in move.arcs:
            if complex_.component(key) is None:
                raise ConstructionError(f"arcs on unknown surface '{key}'")

        lineage: Lineage = {}
        for component in complex_.components():
            arcs = move.arcs.get(component.key, ())
            try:
                cut = self.arc_surgery.run_all(
                    Surface(components=(component,)), arcs
                ).surface
            except SurgeryError as error:
                raise ConstructionError(error.message) from error
            lineage[component.key] = [
                piece.renamed(move.rename.get(piece.key, piece.key))
                for piece in cut.components
            ]

        finals = Counter(
            piece.key for pieces in lineage.values() for piece in pieces
        )
        clashes = sorted(key for key, seen in finals.items() if seen > 1)
        if clashes:
            raise ConstructionError(f"chop produces duplicate ids {clashes}")
        return lineage

    def _check_ledger(
        self,
        body: CompressionBody,
        plan: RectanglePlan,
        arc_counts: Counter,
    ) -> None:
        if arc_counts[body.plus.key] != plan.count:
            raise ConstructionError(
                f"{body.key}: {plan.count} rectangles but "
                f"{arc_counts[body.plus.key]} arcs on '{body.plus.key}'"
            )
        if sum(plan.minus_sides.values()) != plan.count:
            raise ConstructionError(
                f"{body.key}: rectangle bottoms do not add up to "
                f"{plan.count}"
            )
        stray = set(plan.minus_sides) - set(body.minus_keys())
        if stray:
            raise ConstructionError(
                f"{body.key}: rectangle bottoms on foreign surfaces "
                f"{sorted(stray)}"
            )
        for component in body.minus:
            sides = plan.minus_sides.get(component.key, 0)
            if sides != arc_counts[component.key]:
                raise ConstructionError(
                    f"{body.key}: {sides} rectangle bottoms on "
                    f"'{component.key}' but it carries "
                    f"{arc_counts[component.key]} arcs"
                )

    def _split_body(
        self,
        body: CompressionBody,
        plan: RectanglePlan,
        lineage: Lineage,
    ) -> List[CompressionBody]:
        tops = {piece.key: piece for piece in lineage[body.plus.key]}
        bottoms = {
            piece.key: piece
            for component in body.minus
            for piece in lineage[component.key]
        }
        if not plan.bodies:
            if len(tops) != 1 or len(bottoms) != len(body.minus):
                raise ConstructionError(
                    f"{body.key}: rectangle plan must list the new bodies"
                )
            return [body_of(body.label, *tops.values(), bottoms.values())]

        used_tops = [item.plus for item in plan.bodies]
        used_bottoms = [key for item in plan.bodies for key in item.minus]
        if sorted(used_tops) != sorted(tops):
            raise ConstructionError(
                f"{body.key}: new bodies must use {sorted(tops)} once each "
                f"as positive boundary"
            )
        if sorted(used_bottoms) != sorted(bottoms):
            raise ConstructionError(
                f"{body.key}: new bodies must use {sorted(bottoms)} once "
                f"each as negative boundary"
            )
        return [
            body_of(
                body.label,
                tops[item.plus],
                [bottoms[key] for key in item.minus],
            )
            for item in plan.bodies
        ]

    def _piece(
        self,
        chopped: SplittingComplex,
        keys: Set[str],
        label: str,
    ) -> SplittingComplex:
        missing = keys - {component.key for component in chopped.components()}
        if missing:
            raise ConstructionError(
                f"piece {label} names unknown surfaces {sorted(missing)}"
            )
        bodies = []
        for body in chopped.bodies:
            inside = {body.plus.key, *body.minus_keys()} & keys
            if not inside:
                continue
            if len(inside) != 1 + len(body.minus):
                raise ConstructionError(
                    f"body {body.key} straddles piece {label}"
                )
            bodies.append(body)

        def within(components) -> List[SurfaceComponent]:
            return [c for c in components if c.key in keys]

        thin, thick = within(chopped.thin), within(chopped.thick)
        plus, minus = within(chopped.boundary_plus), within(chopped.boundary_minus)
        used = {
            suture
            for component in (*thin, *thick, *plus, *minus)
            for suture in component.boundary
        }
        return self.checked(assemble(
            sutures=[s for s in chopped.sutures if s.id in used],
            thin=thin,
            thick=thick,
            bodies=bodies,
            boundary_plus=plus,
            boundary_minus=minus,
            assumptions=chopped.assumptions,
        ))
