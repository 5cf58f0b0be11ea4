"""
Human and machine renderings of an evaluation.
"""
from constants.formats import TableFormat
from dtos.knots import Evaluation, HandleValue

SEPARATOR = "|"


def format_upper(value: HandleValue) -> str:
    return TableFormat.INFINITY if value.upper is None else str(value.upper)


def format_human(evaluation: Evaluation) -> str:
    value = evaluation.value
    if value.exact:
        headline = f"MN = {value.lower} (exact)"
    else:
        headline = f"MN in [{value.lower}, {format_upper(value)}]"
    lines = [headline]
    for entry in evaluation.provenance:
        depth = entry.path.count(".")
        lines.append(f"{'  ' * (depth + 1)}{entry.rule}: {entry.detail}")
    return "\n".join(lines) + "\n"


def format_machine(evaluation: Evaluation) -> str:
    value = evaluation.value
    number = str(value.lower) if value.exact else "?"
    lines = [SEPARATOR.join([
        number,
        str(value.lower),
        format_upper(value),
        "true" if value.exact else "false",
    ])]
    for entry in evaluation.provenance:
        lines.append(SEPARATOR.join([entry.path, entry.rule, entry.detail]))
    return "\n".join(lines) + "\n"
