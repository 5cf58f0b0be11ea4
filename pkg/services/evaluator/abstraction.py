from abstractions.service import IService


class IEvaluatorService(IService):
    """
    Interface for knot expression services
    """
    pass
