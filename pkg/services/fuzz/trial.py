from collections import Counter
from typing import List, Optional

import numpy as np

from constants.topology import BodyLabel
from dtos.configurations.app import FuzzConfigurationDTO
from dtos.fuzz import TrialResult
from dtos.moves import MoveOutcome
from dtos.splitting_complex import SplittingComplex
from errors.moves import MoveError
from services.complex.census import has_handlebody
from services.complex.validate import ComplexValidationService
from services.compression_body.handles import (
    handle_index,
    handle_number,
    is_handlebody,
)
from services.fuzz.abstraction import IFuzzService
from services.fuzz.generator import (
    RandomComplexService,
    RandomReductionService,
    pick,
)
from services.moves.amalgamate import AmalgamateService
from services.moves.inflate import DeflateService, InflateService
from services.moves.stabilize import DestabilizeService, StabilizeService
from services.moves.weak_reduce import WeakReduceService

from start_utils import logger

MOVE_KINDS = (
    "inflate",
    "deflate",
    "stabilize",
    "destabilize",
    "weak_reduce",
    "amalgamate",
)
INDEX_SHIFT = {"stabilize": 2, "destabilize": -2}


class TrialLedger:
    """
    Counters and violations collected while one trial runs.
    """

    def __init__(self, index: int) -> None:
        self.index = index
        self.applied: Counter = Counter()
        self.rejected: Counter = Counter()
        self.violations: List[str] = []
        self.round_trips = 0
        self.handlebody = False

    def violation(self, message: str) -> None:
        self.violations.append(f"trial {self.index}: {message}")

    def result(self, origin: str) -> TrialResult:
        return TrialResult(
            index=self.index,
            origin=origin,
            applied=dict(self.applied),
            rejected=dict(self.rejected),
            handlebody=self.handlebody,
            round_trips=self.round_trips,
            violations=tuple(self.violations),
        )


class FuzzTrialService(IFuzzService):
    """
    One fuzz trial: build a random complex, apply random moves and check
    the invariants after every successful move. A MoveError means the
    move was refused, which is not a violation. Every weak reduction is
    also undone by amalgamation and must give back the thick surface.
    """

    def __init__(self, config: FuzzConfigurationDTO) -> None:
        super().__init__()
        self.logger = logger
        self.config = config
        self.generator = RandomComplexService(config)
        self.reductions = RandomReductionService()
        self.validator = ComplexValidationService()
        self.inflate = InflateService()
        self.deflate = DeflateService()
        self.stabilize = StabilizeService()
        self.destabilize = DestabilizeService()
        self.weak_reduce = WeakReduceService()
        self.amalgamate = AmalgamateService()

    def run(self, index: int, seed: np.random.SeedSequence) -> TrialResult:
        rng = np.random.default_rng(seed)
        ledger = TrialLedger(index)

        try:
            complex_, origin = self.generator.run(rng)
        except MoveError as error:
            ledger.violation(f"seed failed: {error.message}")
            return ledger.result("none")
        ledger.handlebody = has_handlebody(complex_)
        self._check_bodies(ledger, complex_, "seed")

        moves = int(rng.integers(0, self.config.max_moves + 1))
        for _ in range(moves):
            kind = MOVE_KINDS[int(rng.integers(0, len(MOVE_KINDS)))]
            try:
                outcome = self._apply(ledger, kind, complex_, rng)
            except MoveError as error:
                ledger.rejected[kind] += 1
                self.logger.debug(f"{kind} rejected: {error.message}")
                continue
            except Exception as error:
                ledger.violation(
                    f"{kind} crashed with {type(error).__name__}: {error}"
                )
                break
            if outcome is None:
                ledger.rejected[kind] += 1
                continue
            ledger.applied[kind] += 1
            self._check_move(ledger, kind, complex_, outcome)
            complex_ = outcome.complex
            ledger.handlebody = ledger.handlebody or has_handlebody(complex_)

        return ledger.result(origin)

    def _apply(
        self,
        ledger: TrialLedger,
        kind: str,
        complex_: SplittingComplex,
        rng: np.random.Generator,
    ) -> Optional[MoveOutcome]:
        thick = [component.key for component in complex_.thick]
        thin = [component.key for component in complex_.thin]
        if kind == "inflate":
            return self.inflate.run(complex_, pick(rng, thin)) if thin else None
        if kind == "deflate":
            return self.deflate.run(complex_, pick(rng, thick))
        if kind == "stabilize":
            return self.stabilize.run(complex_, pick(rng, thick))
        if kind == "destabilize":
            return self.destabilize.run(complex_, pick(rng, thick))
        if kind == "weak_reduce":
            target = pick(rng, thick)
            move = self.reductions.run(complex_, target, rng)
            if move is None:
                return None
            outcome = self.weak_reduce.run(complex_, move)
            self._check_round_trip(ledger, complex_, target, outcome)
            return outcome
        if not thin:
            return None
        key = pick(rng, thin)
        below = complex_.bodies_meeting(key, BodyLabel.B)[0]
        above = complex_.bodies_meeting(key, BodyLabel.A)[0]
        common = set(below.minus_keys()) & set(above.minus_keys())
        return self.amalgamate.run(complex_, sorted(common))

    def _check_move(
        self,
        ledger: TrialLedger,
        kind: str,
        before: SplittingComplex,
        outcome: MoveOutcome,
    ) -> None:
        record = outcome.record
        after = outcome.complex
        violations = self.validator.run(after)
        if violations:
            ledger.violation(
                f"{kind} left an invalid complex: {violations[0]}"
            )
        shift = INDEX_SHIFT.get(kind, 0)
        if record.j_after - record.j_before != shift:
            ledger.violation(
                f"{kind} changed j from {record.j_before} to "
                f"{record.j_after}, expected a change of {shift}"
            )
        if (
            kind not in INDEX_SHIFT
            and not has_handlebody(before)
            and not has_handlebody(after)
            and record.h_before != record.h_after
        ):
            ledger.violation(
                f"{kind} changed h from {record.h_before} to "
                f"{record.h_after} without handlebodies"
            )
        self._check_bodies(ledger, after, kind)

    def _check_bodies(
        self,
        ledger: TrialLedger,
        complex_: SplittingComplex,
        where: str,
    ) -> None:
        for body in complex_.bodies:
            expected = handle_index(body) + (2 if is_handlebody(body) else 0)
            if handle_number(body) != expected:
                ledger.violation(
                    f"{where}: body {body.key} has "
                    f"h={handle_number(body)}, j={handle_index(body)}"
                )

    def _check_round_trip(
        self,
        ledger: TrialLedger,
        before: SplittingComplex,
        target: str,
        outcome: MoveOutcome,
    ) -> None:
        original = before.component(target)
        try:
            restored = self.undo_reduction(before, outcome.complex)
        except MoveError as error:
            ledger.violation(
                f"cannot amalgamate the weak reduction of {target} back: "
                f"{error.message}"
            )
            return
        ledger.round_trips += 1
        new_thick = [
            component for component in restored.thick
            if before.component(component.key) is None
        ]
        if len(new_thick) != 1 or new_thick[0].shape() != original.shape():
            ledger.violation(
                f"amalgamating after weak_reduce of {target} did not "
                f"restore genus {original.genus} and boundary "
                f"{original.boundary}"
            )

    def undo_reduction(
        self,
        before: SplittingComplex,
        reduced: SplittingComplex,
    ) -> SplittingComplex:
        """
        Amalgamate along the thin components a weak reduction created,
        closed ones first, until none is left. Each step merges along
        everything the two bodies around the chosen component share.
        """
        complex_ = reduced
        while True:
            created = sorted(
                (
                    component for component in complex_.thin
                    if before.component(component.key) is None
                ),
                key=lambda item: (item.boundary_total > 0, item.key),
            )
            if not created:
                return complex_
            keys = {component.key for component in created}
            error: Optional[MoveError] = None
            for component in created:
                below = complex_.bodies_meeting(component.key, BodyLabel.B)
                above = complex_.bodies_meeting(component.key, BodyLabel.A)
                if len(below) != 1 or len(above) != 1:
                    continue
                common = (
                    set(below[0].minus_keys()) & set(above[0].minus_keys())
                )
                if not common <= keys:
                    continue
                try:
                    merged = self.amalgamate.run(complex_, sorted(common))
                    complex_ = merged.complex
                    break
                except MoveError as failure:
                    error = failure
            else:
                raise error or MoveError(
                    "amalgamate",
                    f"no created thin surface among {sorted(keys)} "
                    f"separates two bodies",
                )
