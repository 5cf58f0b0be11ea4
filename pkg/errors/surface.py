from abstractions.error import IError


class SurgeryError(IError):
    """
    Raised when a disk or arc surgery is invalid against its surface:
    unknown target, genus or boundary underflow, sphere creation or
    inconsistent split data.
    """
    pass
