from abstractions.service import IService


class ICompressionBodyService(IService):
    """
    Interface for compression body services
    """
    pass
