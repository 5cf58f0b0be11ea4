import json

from dtos.configurations.app import AppConfigurationDTO

from start_utils import PROJECT_ROOT, logger


class AppConfiguration:
    """
    Singleton loader and manager for application configuration.
    Loads configuration from config/app/config.json.
    """
    _instance = None

    def __new__(cls):

        if cls._instance is None:
            cls._instance = super(AppConfiguration, cls).__new__(cls)
            cls._instance.config = {}
            cls._instance.load_config()
        return cls._instance

    def load_config(self):
        """
        Load application configuration from JSON file.
        Logs if the file is not found or cannot be decoded.
        """
        path = PROJECT_ROOT / "config" / "app" / "config.json"
        try:

            with open(path, "r") as file:
                self.config = json.load(file)
            logger.debug("App config loaded successfully.")

        except FileNotFoundError:
            logger.debug("App config file not found.")

        except json.JSONDecodeError:
            logger.debug("Error decoding app config file.")

    def get_config(self) -> AppConfigurationDTO:
        """
        Return the application configuration as a DTO.
        """
        return AppConfigurationDTO.model_validate(self.config)
