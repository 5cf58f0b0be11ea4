from abstractions.service import IService


class ISurfaceService(IService):
    """
    Interface for surface calculus services
    """
    pass
