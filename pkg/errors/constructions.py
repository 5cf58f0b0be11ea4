from abstractions.error import IError


class ConstructionError(IError):
    """
    Raised when a builder receives parameters or inputs of the wrong shape.
    """
    pass
