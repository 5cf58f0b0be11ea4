from typing import Dict, List, Optional

from constants.formats import ComplexFormat
from dtos.splitting_complex import SplittingComplex
from services.complex.abstraction import IComplexService
from services.complex.canonical import canonical


def format_boundary(boundary: Dict[str, int]) -> str:
    if not boundary:
        return ComplexFormat.EMPTY
    return ComplexFormat.LIST_SEPARATOR.join(
        f"{suture}{ComplexFormat.PAIR_SEPARATOR}{boundary[suture]}"
        for suture in sorted(boundary)
    )


def format_tag(tag: Optional[str]) -> str:
    return tag if tag else ComplexFormat.EMPTY


class SerializeComplexService(IComplexService):
    """
    Render a complex in the canonical `.ghs` text format. Components are
    ordered by key and bodies by (thick key, label), so equal complexes
    serialize to identical bytes.
    """

    def run(self, complex_: SplittingComplex) -> str:
        complex_ = canonical(complex_)
        sep = ComplexFormat.SEPARATOR
        lines: List[str] = [ComplexFormat.SUTURES]
        for suture in complex_.sutures:
            lines.append(f"{suture.id}{sep}{suture.kind.value}")

        lines.append(ComplexFormat.SURFACES)
        rows = []
        for role, components in complex_.role_map().items():
            for component in components:
                rows.append((component.key, sep.join([
                    component.key,
                    role.value,
                    str(component.genus),
                    format_boundary(component.boundary),
                    format_tag(component.tag),
                ])))
        lines.extend(row for _, row in sorted(rows))

        lines.append(ComplexFormat.BODIES)
        for body in complex_.bodies:
            lines.append(sep.join([
                body.plus.key,
                body.label.value,
                format_boundary(body.pairing),
            ]))

        lines.append(ComplexFormat.INCIDENCE)
        for body in complex_.bodies:
            minus = ComplexFormat.LIST_SEPARATOR.join(body.minus_keys())
            lines.append(sep.join([
                body.plus.key,
                body.label.value,
                minus or ComplexFormat.EMPTY,
            ]))

        lines.append(ComplexFormat.ASSUMPTIONS)
        lines.extend(sorted(flag.value for flag in complex_.assumptions))
        return "\n".join(lines) + "\n"
