from typing import Dict, List, Optional, Set, Tuple

from pydantic import ValidationError

from constants.formats import ComplexFormat
from constants.topology import Assumption, BodyLabel, SurfaceRole, SutureKind
from dtos.compression_body import CompressionBody
from dtos.splitting_complex import SplittingComplex
from dtos.surface import SurfaceComponent, Suture
from errors.splitting_complex import ComplexParseError
from services.complex.abstraction import IComplexService
from services.complex.canonical import assemble

from start_utils import logger

BodyKey = Tuple[str, BodyLabel]


def split_fields(
    line: str,
    number: int,
    expected: int,
    section: str,
) -> List[str]:
    fields = [field.strip() for field in line.split(ComplexFormat.SEPARATOR)]
    if len(fields) != expected:
        raise ComplexParseError(
            f"{section} line needs {expected} fields, got {len(fields)}",
            line=number,
        )
    return fields


def parse_int(value: str, number: int, field: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise ComplexParseError(
            f"'{value}' is not an integer", line=number, field=field
        ) from None


def parse_boundary(
    value: str,
    number: int,
    field: str,
    sutures: Dict[str, Suture],
) -> Dict[str, int]:
    boundary: Dict[str, int] = {}
    if value == ComplexFormat.EMPTY:
        return boundary
    for item in value.split(ComplexFormat.LIST_SEPARATOR):
        suture, sep, count = item.strip().partition(
            ComplexFormat.PAIR_SEPARATOR
        )
        if not sep:
            raise ComplexParseError(
                f"expected suture:count, got '{item}'",
                line=number,
                field=field,
            )
        if suture not in sutures:
            raise ComplexParseError(
                f"unknown suture '{suture}'", line=number, field=field
            )
        if suture in boundary:
            raise ComplexParseError(
                f"suture '{suture}' listed twice", line=number, field=field
            )
        circles = parse_int(count, number, field)
        if circles < 0:
            raise ComplexParseError(
                f"negative circle count {circles}", line=number, field=field
            )
        boundary[suture] = circles
    return boundary


def parse_label(value: str, number: int) -> BodyLabel:
    try:
        return BodyLabel(value)
    except ValueError:
        raise ComplexParseError(
            f"unknown body label '{value}'", line=number, field="label"
        ) from None


class DeserializeComplexService(IComplexService):
    """
    Parse `.ghs` text into a canonical complex. Only syntax and references
    are checked here; incidence rules are left to validation.
    """

    def __init__(self) -> None:
        super().__init__()
        self.logger = logger

    def run(self, text: str) -> SplittingComplex:
        sutures: Dict[str, Suture] = {}
        surfaces: Dict[str, Tuple[SurfaceRole, SurfaceComponent]] = {}
        pairings: Dict[BodyKey, Tuple[Dict[str, int], int]] = {}
        incidence: Dict[BodyKey, List[str]] = {}
        assumptions: Set[Assumption] = set()
        seen_sections: Set[str] = set()
        section: Optional[str] = None

        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split(ComplexFormat.COMMENT, 1)[0].strip()
            if not line:
                continue
            if line in ComplexFormat.SECTIONS:
                if line in seen_sections:
                    raise ComplexParseError(
                        f"section {line} repeated", line=number
                    )
                seen_sections.add(line)
                section = line
                continue
            if section is None:
                raise ComplexParseError(
                    "content before the first section", line=number
                )

            if section == ComplexFormat.SUTURES:
                self._parse_suture(line, number, sutures)
            elif section == ComplexFormat.SURFACES:
                self._parse_surface(line, number, sutures, surfaces)
            elif section == ComplexFormat.BODIES:
                self._parse_body(line, number, sutures, surfaces, pairings)
            elif section == ComplexFormat.INCIDENCE:
                self._parse_incidence(
                    line, number, surfaces, pairings, incidence
                )
            else:
                try:
                    assumptions.add(Assumption(line))
                except ValueError:
                    raise ComplexParseError(
                        f"unknown assumption '{line}'", line=number
                    ) from None

        bodies: List[CompressionBody] = []
        for key, (pairing, number) in pairings.items():
            if key not in incidence:
                raise ComplexParseError(
                    f"body {key[0]}/{key[1].value} has no incidence line",
                    line=number,
                )
            bodies.append(CompressionBody(
                label=key[1],
                plus=surfaces[key[0]][1],
                minus=tuple(surfaces[minus][1] for minus in incidence[key]),
                pairing=pairing,
            ))

        by_role: Dict[SurfaceRole, List[SurfaceComponent]] = {
            role: [] for role in SurfaceRole
        }
        for role, component in surfaces.values():
            by_role[role].append(component)

        complex_ = assemble(
            sutures=sutures.values(),
            thin=by_role[SurfaceRole.THIN],
            thick=by_role[SurfaceRole.THICK],
            bodies=bodies,
            boundary_plus=by_role[SurfaceRole.PLUS],
            boundary_minus=by_role[SurfaceRole.MINUS],
            assumptions=assumptions,
        )
        self.logger.debug(
            f"parsed complex with {len(surfaces)} surfaces and "
            f"{len(bodies)} bodies"
        )
        return complex_

    def _parse_suture(
        self,
        line: str,
        number: int,
        sutures: Dict[str, Suture],
    ) -> None:
        suture_id, kind = split_fields(line, number, 2, "SUTURES")
        if suture_id in sutures:
            raise ComplexParseError(
                f"duplicate id '{suture_id}'", line=number, field="id"
            )
        try:
            sutures[suture_id] = Suture(id=suture_id, kind=SutureKind(kind))
        except (ValueError, ValidationError):
            raise ComplexParseError(
                f"bad suture '{line}'", line=number, field="kind"
            ) from None

    def _parse_surface(
        self,
        line: str,
        number: int,
        sutures: Dict[str, Suture],
        surfaces: Dict[str, Tuple[SurfaceRole, SurfaceComponent]],
    ) -> None:
        key, role, genus, boundary, tag = split_fields(
            line, number, 5, "SURFACES"
        )
        if key in surfaces:
            raise ComplexParseError(
                f"duplicate id '{key}'", line=number, field="key"
            )
        try:
            surface_role = SurfaceRole(role)
        except ValueError:
            raise ComplexParseError(
                f"unknown role '{role}'", line=number, field="role"
            ) from None
        try:
            component = SurfaceComponent(
                key=key,
                genus=parse_int(genus, number, "genus"),
                boundary=parse_boundary(boundary, number, "boundary", sutures),
                tag=None if tag == ComplexFormat.EMPTY else tag,
            )
        except ValidationError as error:
            raise ComplexParseError(
                f"bad surface: {error.errors()[0]['msg']}", line=number
            ) from None
        surfaces[key] = (surface_role, component)

    def _parse_body(
        self,
        line: str,
        number: int,
        sutures: Dict[str, Suture],
        surfaces: Dict[str, Tuple[SurfaceRole, SurfaceComponent]],
        pairings: Dict[BodyKey, Tuple[Dict[str, int], int]],
    ) -> None:
        thick, label, pairing = split_fields(line, number, 3, "BODIES")
        if thick not in surfaces:
            raise ComplexParseError(
                f"unknown surface '{thick}'", line=number, field="thick"
            )
        key = (thick, parse_label(label, number))
        if key in pairings:
            raise ComplexParseError(
                f"duplicate id '{thick}/{label}'", line=number
            )
        pairings[key] = (
            parse_boundary(pairing, number, "pairing", sutures),
            number,
        )

    def _parse_incidence(
        self,
        line: str,
        number: int,
        surfaces: Dict[str, Tuple[SurfaceRole, SurfaceComponent]],
        pairings: Dict[BodyKey, Tuple[Dict[str, int], int]],
        incidence: Dict[BodyKey, List[str]],
    ) -> None:
        thick, label, minus = split_fields(line, number, 3, "INCIDENCE")
        key = (thick, parse_label(label, number))
        if key not in pairings:
            raise ComplexParseError(
                f"incidence for unknown body '{thick}/{label}'", line=number
            )
        if key in incidence:
            raise ComplexParseError(
                f"duplicate id '{thick}/{label}'", line=number
            )
        keys: List[str] = []
        if minus != ComplexFormat.EMPTY:
            keys = [
                item.strip()
                for item in minus.split(ComplexFormat.LIST_SEPARATOR)
            ]
        for item in keys:
            if item not in surfaces:
                raise ComplexParseError(
                    f"unknown surface '{item}'", line=number, field="minus"
                )
        incidence[key] = keys
