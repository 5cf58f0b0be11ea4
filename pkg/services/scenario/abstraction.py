from abstractions.service import IService


class IScenarioService(IService):
    """
    Interface for scenario replay services
    """
    pass
