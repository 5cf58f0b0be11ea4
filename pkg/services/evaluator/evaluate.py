from typing import List, Tuple

from constants.rules import Rule
from dtos.knots import (
    Atom,
    Cable,
    Evaluation,
    HandleValue,
    KnotExpr,
    KnotTable,
    ProvenanceEntry,
    Satellite,
    Sum,
)
from errors.knots import EvaluationError
from services.evaluator.abstraction import IEvaluatorService
from services.evaluator.parse import render, summands

from start_utils import logger

Trace = List[ProvenanceEntry]


class EvaluateExprService(IEvaluatorService):
    """
    Morse-Novikov number of a knot expression from table facts:

    - connected sum adds handle numbers, both bounds, over the whole
      chain of summands at once;
    - cabling keeps the handle number of the companion;
    - a satellite is bounded by [0, h(P) + h(K)], since no lower bound
      beyond 0 is known in general.

    Every node of the expression contributes one provenance entry.
    """

    def __init__(self) -> None:
        super().__init__()
        self.logger = logger

    def run(self, expr: KnotExpr, table: KnotTable) -> Evaluation:
        value, trace = self._evaluate(expr, table, "0")
        self.logger.debug(
            f"{render(expr)}: [{value.lower}, {value.upper}]"
        )
        return Evaluation(value=value, provenance=tuple(trace))

    def _evaluate(
        self,
        expr: KnotExpr,
        table: KnotTable,
        path: str,
    ) -> Tuple[HandleValue, Trace]:
        if isinstance(expr, Atom):
            record = table.knots.get(expr.name)
            if record is None:
                raise EvaluationError(f"unknown knot '{expr.name}'")
            rule = Rule.FIBERED if record.fibered else Rule.TABLE
            detail = f"{expr.name}: {record.source}" if record.source else expr.name
            return record.h, [ProvenanceEntry(
                path=path, rule=rule, detail=detail, value=record.h
            )]

        if isinstance(expr, Sum):
            value = HandleValue.of(0)
            traces: Trace = []
            for index, term in enumerate(summands(expr)):
                term_value, term_trace = self._evaluate(
                    term, table, f"{path}.{index}"
                )
                value = value + term_value
                traces.extend(term_trace)
            entry = ProvenanceEntry(
                path=path, rule=Rule.SUM, detail=render(expr), value=value
            )
            return value, [entry, *traces]

        if isinstance(expr, Cable):
            value, trace = self._evaluate(expr.inner, table, f"{path}.0")
            rule = Rule.CABLE_IDENTITY if expr.p == 1 else Rule.CABLE
            entry = ProvenanceEntry(
                path=path, rule=rule, detail=render(expr), value=value
            )
            return value, [entry, *trace]

        if isinstance(expr, Satellite):
            record = table.patterns.get(expr.pattern)
            if record is None:
                raise EvaluationError(f"unknown pattern '{expr.pattern}'")
            if record.winding != expr.winding:
                raise EvaluationError(
                    f"pattern '{expr.pattern}' has winding "
                    f"{record.winding}, not {expr.winding}"
                )
            inner, trace = self._evaluate(expr.inner, table, f"{path}.0")
            pattern = ProvenanceEntry(
                path=f"{path}.p",
                rule=Rule.FIBERED_PATTERN if record.fibered else Rule.TABLE,
                detail=(
                    f"{expr.pattern}: {record.source}"
                    if record.source else expr.pattern
                ),
                value=record.h,
            )
            upper = None
            if record.h.upper is not None and inner.upper is not None:
                upper = record.h.upper + inner.upper
            value = HandleValue(lower=0, upper=upper)
            entry = ProvenanceEntry(
                path=path, rule=Rule.SATELLITE, detail=render(expr), value=value
            )
            return value, [entry, pattern, *trace]

        raise EvaluationError(f"unsupported expression {expr!r}")
