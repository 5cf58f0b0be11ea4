from abstractions.service import IService


class IComplexService(IService):
    """
    Interface for splitting complex services
    """
    pass
