from typing import Dict, List, Optional, Tuple

from constants.topology import Assumption, BodyLabel
from dtos.compression_body import CompressionBody
from dtos.moves import MoveOutcome, WeakReductionMove
from dtos.splitting_complex import SplittingComplex
from dtos.surface import Surface, SurfaceComponent
from errors.surface import SurgeryError
from services.complex.assume import STRONG_FLAGS
from services.compression_body.factory import body_of
from services.compression_body.handles import (
    handle_index,
    is_trivial,
    total_handle_index,
)
from services.moves.abstraction import IMoveService
from services.moves.rewire import drop_keys, other_bodies
from services.surface.disk_surgery import DiskSurgeryService

Partition = Dict[str, List[str]]


class WeakReduceService(IMoveService):
    """
    Untelescope a thick surface S along disjoint compressing disks D_A
    (A side) and D_B (B side). S is replaced by S1 = S compressed along
    D_A, S2 = S compressed along D_B and a new thin surface R = S
    compressed along both:

        A | S | B   becomes   A1 | S1 | B1  R  A2 | S2 | B2

    The caller supplies the disks and, when S1, S2 or R is disconnected,
    how the negative boundaries are distributed among the new bodies.
    """

    kind = "weak_reduce"

    def __init__(self) -> None:
        super().__init__()
        self.surgery = DiskSurgeryService()

    def run(
        self,
        complex_: SplittingComplex,
        move: WeakReductionMove,
    ) -> MoveOutcome:
        thick = complex_.component(move.thick)
        if thick is None or thick not in complex_.thick:
            raise self.fail(f"'{move.thick}' is not a thick surface")
        if complex_.assumptions & STRONG_FLAGS:
            raise self.fail(
                "complex is asserted strongly irreducible", thick=move.thick
            )
        body_a = complex_.body(thick.key, BodyLabel.A)
        body_b = complex_.body(thick.key, BodyLabel.B)
        if body_a is None or body_b is None:
            raise self.fail(f"'{thick.key}' is missing a body")
        if is_trivial(body_a) or is_trivial(body_b):
            raise self.fail(
                f"'{thick.key}' bounds a trivial body and has no "
                f"compressing disk on that side"
            )

        source = Surface(components=(thick,))
        try:
            first = self.surgery.run_all(source, move.disks_a).surface
            second = self.surgery.run_all(source, move.disks_b).surface
            thin = self.surgery.run_all(
                first, move.disks_b_on_s1 or move.disks_b
            ).surface
        except SurgeryError as error:
            raise self.fail(error.message) from error
        self._check_ledger(thick, move, first, second, thin)

        keys = self._final_keys(complex_, move, thick.key, first, second, thin)
        s1 = {c.key: c.renamed(keys["S1", c.key]) for c in first.components}
        s2 = {c.key: c.renamed(keys["S2", c.key]) for c in second.components}
        r = {c.key: c.renamed(keys["R", c.key]) for c in thin.components}

        a1 = self._partition(move.a1_minus, s1, list(body_a.minus_keys()), "a1")
        b1 = self._partition(move.b1_minus, s1, list(r), "b1")
        a2 = self._partition(move.a2_minus, s2, list(r), "a2")
        b2 = self._partition(move.b2_minus, s2, list(body_b.minus_keys()), "b2")

        old = {c.key: c for c in (*body_a.minus, *body_b.minus)}
        bodies: List[CompressionBody] = []
        for lineage, component in s1.items():
            bodies.append(body_of(
                BodyLabel.A, component, [old[key] for key in a1[lineage]]
            ))
            bodies.append(body_of(
                BodyLabel.B, component, [r[key] for key in b1[lineage]]
            ))
        for lineage, component in s2.items():
            bodies.append(body_of(
                BodyLabel.A, component, [r[key] for key in a2[lineage]]
            ))
            bodies.append(body_of(
                BodyLabel.B, component, [old[key] for key in b2[lineage]]
            ))

        flags = set(complex_.assumptions) - set(STRONG_FLAGS)
        flags.discard(Assumption.THIN_INCOMPRESSIBLE)
        if move.maximal and (
            Assumption.THIN_INCOMPRESSIBLE in complex_.assumptions
            or not complex_.thin
        ):
            flags.add(Assumption.THIN_INCOMPRESSIBLE)

        result = complex_.model_copy(update={
            "thin": (*complex_.thin, *r.values()),
            "thick": (
                *drop_keys(complex_.thick, {thick.key}),
                *s1.values(),
                *s2.values(),
            ),
            "bodies": (*other_bodies(complex_, [body_a, body_b]), *bodies),
            "assumptions": frozenset(flags),
        })

        j_before = handle_index(body_a) + handle_index(body_b)
        j_after = total_handle_index(bodies)
        if j_before != j_after:
            raise self.fail(
                f"handle index of the reduced region changed from "
                f"{j_before} to {j_after}"
            )
        return self.outcome(
            complex_,
            result,
            move.model_dump(mode="json", exclude_defaults=True),
        )

    def _check_ledger(
        self,
        thick: SurfaceComponent,
        move: WeakReductionMove,
        first: Surface,
        second: Surface,
        thin: Surface,
    ) -> None:
        euler = thick.euler_char
        a, b = len(move.disks_a), len(move.disks_b)
        b_on_s1 = len(move.disks_b_on_s1 or move.disks_b)
        expected: Tuple[Tuple[str, Surface, int], ...] = (
            ("S1", first, euler + 2 * a),
            ("S2", second, euler + 2 * b),
            ("R", thin, euler + 2 * a + 2 * b_on_s1),
        )
        for name, surface, value in expected:
            actual = sum(c.euler_char for c in surface.components)
            if actual != value:
                raise self.fail(
                    f"euler characteristic of {name} is {actual}, "
                    f"expected {value}"
                )
        if b_on_s1 != b:
            raise self.fail(
                f"{b_on_s1} B-side disks on S1 but {b} on S"
            )

    def _final_keys(
        self,
        complex_: SplittingComplex,
        move: WeakReductionMove,
        origin: str,
        first: Surface,
        second: Surface,
        thin: Surface,
    ) -> Dict[Tuple[str, str], str]:
        keys: Dict[Tuple[str, str], str] = {}
        for part, surface in (("S1", first), ("S2", second), ("R", thin)):
            for lineage in surface.keys():
                if lineage.startswith(origin):
                    suffix = lineage[len(origin):]
                else:
                    suffix = f".{lineage}"
                generated = f"{move.label}.{part}{suffix}"
                keys[part, lineage] = move.rename.get(generated, generated)

        used = {c.key for c in complex_.components()} - {origin}
        final = list(keys.values())
        if len(set(final)) != len(final) or used & set(final):
            raise self.fail(
                f"generated keys {sorted(final)} clash; pick another label"
            )
        return keys

    def _partition(
        self,
        given: Optional[Partition],
        lineages: Dict[str, SurfaceComponent],
        members: List[str],
        name: str,
    ) -> Partition:
        if given is None:
            if len(lineages) != 1:
                raise self.fail(
                    f"partition {name} is required when the surface has "
                    f"{len(lineages)} components"
                )
            return {next(iter(lineages)): list(members)}

        unknown = set(given) - set(lineages)
        if unknown:
            raise self.fail(
                f"partition {name} names unknown components {sorted(unknown)}"
            )
        assigned = [key for keys in given.values() for key in keys]
        if sorted(assigned) != sorted(members):
            raise self.fail(
                f"partition {name} assigns {sorted(assigned)} but must "
                f"cover {sorted(members)} exactly once"
            )
        return {lineage: list(given.get(lineage, [])) for lineage in lineages}
