from typing import Final, Tuple


class ComplexFormat:
    """
    Tokens of the line-oriented `.ghs` complex format.
    """

    SEPARATOR: Final[str] = "|"
    COMMENT: Final[str] = "#"
    LIST_SEPARATOR: Final[str] = ","
    PAIR_SEPARATOR: Final[str] = ":"
    EMPTY: Final[str] = "-"
    SUTURES: Final[str] = "SUTURES"
    SURFACES: Final[str] = "SURFACES"
    BODIES: Final[str] = "BODIES"
    INCIDENCE: Final[str] = "INCIDENCE"
    ASSUMPTIONS: Final[str] = "ASSUMPTIONS"
    SECTIONS: Final[Tuple[str, ...]] = (
        SUTURES, SURFACES, BODIES, INCIDENCE, ASSUMPTIONS,
    )
    EXTENSION: Final[str] = ".ghs"


class TableFormat:
    """
    Tokens of the line-oriented `.knots` table format.
    """

    SEPARATOR: Final[str] = "|"
    COMMENT: Final[str] = "#"
    KNOTS_SECTION: Final[str] = "[knots]"
    PATTERNS_SECTION: Final[str] = "[patterns]"
    FIBERED: Final[str] = "fibered"
    NON_FIBERED: Final[str] = "nonfibered"
    INFINITY: Final[str] = "inf"
    KNOT_FIELDS: Final[int] = 5
    PATTERN_FIELDS: Final[int] = 6
    EXTENSION: Final[str] = ".knots"


class TraceFormat:
    """
    Tokens of `.trace` scenario scripts and MoveRecord lines.
    """

    SEPARATOR: Final[str] = "|"
    COMMENT: Final[str] = "#"
    START: Final[str] = "start"
    ASSUME: Final[str] = "assume"
    PIECE: Final[str] = "piece"
    CHECK: Final[str] = "check"
    CHOP: Final[str] = "chop"
    EXTENSION: Final[str] = ".trace"


class ExprFormat:
    """
    Limits of the knot expression grammar.
    """

    SUM: Final[str] = "#"
    # parentheses, cables and satellites nested inside each other
    MAX_DEPTH: Final[int] = 64
