from typing import Final


class Rule:
    """
    Provenance labels attached to each node of an evaluation.
    """

    TABLE: Final[str] = "table"
    FIBERED: Final[str] = "fibered knots have MN = 0"
    SUM: Final[str] = "additivity under connected sum"
    CABLE_IDENTITY: Final[str] = "p = 1 cable is the knot itself"
    CABLE: Final[str] = "cabling preserves handle number"
    SATELLITE: Final[str] = "satellite upper bound h(P) + h(K)"
    FIBERED_PATTERN: Final[str] = "fibered pattern has h = 0"


class ExitCode:
    """
    Process exit codes of the command line.
    """

    OK: Final[int] = 0
    INVALID: Final[int] = 1
    PARSE: Final[int] = 2
    EVALUATION: Final[int] = 3
