from typing import Dict, List, Optional

from pydantic import ValidationError

from constants.formats import TraceFormat
from constants.topology import Assumption
from dtos.moves import ChopMove, WeakReductionMove
from dtos.scenario import ScenarioReport, TraceStep
from dtos.splitting_complex import SplittingComplex
from errors.constructions import ConstructionError
from errors.moves import MoveError
from errors.scenario import ScenarioError
from repositories.complex import ComplexRepository
from repositories.trace import TraceRepository
from services.complex.assume import AssumeService
from services.complex.census import handle_index_of, handle_number_of
from services.complex.validate import ComplexValidationService
from services.constructions.annulus_chop import AnnulusChopService
from services.moves.amalgamate import AmalgamateService
from services.moves.inflate import DeflateService, InflateService
from services.moves.stabilize import DestabilizeService, StabilizeService
from services.moves.weak_reduce import WeakReduceService
from services.scenario.abstraction import IScenarioService

from start_utils import logger

SCENARIOS = ("lemma-incompressible", "thm-additivity", "thm-cable")
INDEX_CHANGING = {StabilizeService.kind, DestabilizeService.kind}


class ReplayScenarioService(IScenarioService):
    """
    Replay a scripted proof: load the start complex, apply moves, record
    assumptions, switch between chop pieces and check the claimed handle
    numbers and indices. Besides the explicit checks every move must keep
    the handle index (stabilizations excepted), every chop must split it
    additively across its pieces, and recorded move lines must match the
    replayed values.
    """

    def __init__(self, fixture_dir: str) -> None:
        super().__init__()
        self.logger = logger
        self.complexes = ComplexRepository(fixture_dir)
        self.traces = TraceRepository(f"{fixture_dir}/scenarios")
        self.validator = ComplexValidationService()
        self.assume = AssumeService()
        self.chop = AnnulusChopService()
        self.moves = {
            service.kind: service
            for service in (
                AmalgamateService(),
                WeakReduceService(),
                InflateService(),
                DeflateService(),
                StabilizeService(),
                DestabilizeService(),
            )
        }

    def run(self, name: str) -> ScenarioReport:
        steps = self.traces.get(name)
        lines: List[str] = []
        failures: List[str] = []
        records: List[str] = []
        current: Optional[SplittingComplex] = None
        pieces: Dict[str, SplittingComplex] = {}

        for step in steps:
            if step.kind == TraceFormat.START:
                current = self.complexes.get(step.arguments["file"])
                violations = self.validator.run(current)
                if violations:
                    failures.append(
                        f"line {step.line}: start complex is invalid: "
                        f"{violations[0]}"
                    )
                    break
                lines.append(self._describe(step, current))
                continue
            if current is None:
                raise ScenarioError(f"line {step.line}: no start complex")

            try:
                if step.kind == TraceFormat.ASSUME:
                    flag = Assumption(step.arguments["name"])
                    current = self.assume.run(current, [flag])
                elif step.kind == TraceFormat.PIECE:
                    label = step.arguments["name"]
                    if label not in pieces:
                        raise ScenarioError(
                            f"line {step.line}: no piece '{label}'"
                        )
                    current = pieces[label]
                elif step.kind == TraceFormat.CHECK:
                    failure = self._check(step, current)
                    if failure:
                        failures.append(failure)
                elif step.kind == TraceFormat.CHOP:
                    result = self.chop.run(
                        current, ChopMove.model_validate(step.arguments)
                    )
                    pieces = dict(result.pieces)
                    failures.extend(self._check_chop(step, current, pieces))
                    current = result.complex
                else:
                    current = self._move(step, current, failures, records)
            except (MoveError, ConstructionError) as error:
                failures.append(f"line {step.line}: {error.message}")
                break
            except (ValidationError, ValueError, TypeError) as error:
                raise ScenarioError(
                    f"line {step.line}: bad arguments for {step.kind}: {error}"
                ) from None
            lines.append(self._describe(step, current))

        report = ScenarioReport(
            name=name,
            lines=tuple(lines),
            failures=tuple(failures),
            records=tuple(records),
        )
        self.logger.info(
            f"scenario {name}: {len(lines)} steps, "
            f"{len(failures)} failures"
        )
        return report

    def _move(
        self,
        step: TraceStep,
        current: SplittingComplex,
        failures: List[str],
        records: List[str],
    ) -> SplittingComplex:
        service = self.moves.get(step.kind)
        if service is None:
            raise ScenarioError(f"line {step.line}: unknown step '{step.kind}'")
        arguments = dict(step.arguments)
        if step.kind == WeakReduceService.kind:
            outcome = service.run(
                current, WeakReductionMove.model_validate(arguments)
            )
        else:
            outcome = service.run(current, **arguments)
        record = outcome.record
        records.append(record.to_line())
        if step.kind not in INDEX_CHANGING and record.j_before != record.j_after:
            failures.append(
                f"line {step.line}: {step.kind} changed the handle index "
                f"from {record.j_before} to {record.j_after}"
            )
        replayed = (
            record.h_before, record.h_after, record.j_before, record.j_after
        )
        if step.expected is not None and step.expected != replayed:
            failures.append(
                f"line {step.line}: recorded h/j {step.expected} but "
                f"replayed {replayed}"
            )
        return outcome.complex

    def _check(self, step: TraceStep, current: SplittingComplex) -> str:
        quantity = step.arguments["quantity"]
        expected = step.arguments["value"]
        if quantity == "h":
            actual = handle_number_of(current)
        else:
            actual = handle_index_of(current)
        if actual != expected:
            return (
                f"line {step.line}: expected {quantity} = {expected}, "
                f"got {actual}"
            )
        return ""

    def _check_chop(
        self,
        step: TraceStep,
        whole: SplittingComplex,
        pieces: Dict[str, SplittingComplex],
    ) -> List[str]:
        if not pieces:
            return []
        total = sum(handle_index_of(piece) for piece in pieces.values())
        if total != handle_index_of(whole):
            return [
                f"line {step.line}: pieces have handle index {total}, "
                f"whole complex {handle_index_of(whole)}"
            ]
        return []

    def _describe(self, step: TraceStep, current: SplittingComplex) -> str:
        label = step.kind
        if step.kind in (TraceFormat.ASSUME, TraceFormat.PIECE):
            label = f"{step.kind} {step.arguments['name']}"
        elif step.kind == TraceFormat.CHECK:
            label = (
                f"check {step.arguments['quantity']} = "
                f"{step.arguments['value']}"
            )
        return (
            f"{step.line:>3} {label:<24} h={handle_number_of(current)} "
            f"j={handle_index_of(current)} thin={len(current.thin)} "
            f"thick={len(current.thick)}"
        )
