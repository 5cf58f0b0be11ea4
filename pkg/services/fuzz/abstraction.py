from abstractions.service import IService


class IFuzzService(IService):
    """
    Interface for invariant fuzzing services
    """
    pass
