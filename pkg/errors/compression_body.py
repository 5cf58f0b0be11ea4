from abstractions.error import IError


class BodyError(IError):
    """
    Raised when a compression body is arithmetically unrealizable.
    """
    pass
