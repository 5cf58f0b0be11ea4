from abstractions.error import IError


class ScenarioError(IError):
    """
    Raised when a scenario trace is malformed or names an unknown scenario.
    """
    pass
