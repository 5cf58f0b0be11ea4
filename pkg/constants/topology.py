from enum import Enum
from typing import Final


class SutureKind(str, Enum):
    """
    Kind of a suture of the ambient sutured manifold.
    """
    ANNULAR = "annular"
    TOROIDAL = "toroidal"


class BodyLabel(str, Enum):
    """
    Side label of a compression body. A-bodies have negative boundary in
    thin surfaces and R-, B-bodies in thin surfaces and R+.
    """
    A = "A"
    B = "B"


class SurfaceRole(str, Enum):
    """
    Role of a surface component inside a splitting complex.
    """
    THIN = "thin"
    THICK = "thick"
    PLUS = "plus"
    MINUS = "minus"


class Assumption(str, Enum):
    """
    Caller-asserted geometric facts the combinatorics cannot decide.
    """
    LOCALLY_THIN = "locally_thin"
    THIN_INCOMPRESSIBLE = "thin_incompressible"
    STRONGLY_IRREDUCIBLE = "strongly_irreducible"


class DiskKind(str, Enum):
    NON_SEPARATING = "non_separating"
    SEPARATING = "separating"


class ArcKind(str, Enum):
    JOIN_TWO_CIRCLES = "join_two_circles"
    SAME_CIRCLE_NON_SEPARATING = "same_circle_non_separating"
    SAME_CIRCLE_SEPARATING = "same_circle_separating"


class Topology:
    """
    Naming conventions shared by builders and moves.
    """

    KNOT_SUTURE: Final[str] = "k"
    COMPANION_SUTURE: Final[str] = "c"
    # ids, keys and tags: no format separators, never the empty marker "-"
    KEY_PATTERN: Final[str] = r"^[A-Za-z0-9_.~+][A-Za-z0-9_.~+-]*$"
    THIN_KEY: Final[str] = "R"
    THICK_KEY: Final[str] = "S"
    LEFT_SUFFIX: Final[str] = ".0"
    RIGHT_SUFFIX: Final[str] = ".1"
    INFLATE_THICK: Final[str] = "~t"
    INFLATE_THIN: Final[str] = "~r"
    BODY_SEPARATOR: Final[str] = "/"
