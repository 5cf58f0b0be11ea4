"""
Startup utilities: configures logging, loads environment variables and the
application configuration.
"""
import os
import sys

from pathlib import Path

from dotenv import load_dotenv
from loguru import logger

PROJECT_ROOT: Path = Path(__file__).resolve().parent
LOG_FORMAT: str = (
    "<green>{time:MMMM-D-YYYY}</green> | <black>{time:HH:mm:ss}</black> | "
    "<level>{level}</level> | <cyan>{message}</cyan> | "
    "<magenta>{name}:{function}:{line}</magenta> | "
    "<yellow>{extra}</yellow>"
)


def configure_logging(level: str) -> None:
    """
    Replace every loguru sink with a single stderr sink at `level`.
    """
    logger.remove()
    logger.add(sys.stderr, level=level, colorize=True, format=LOG_FORMAT)


# Load environment variables from .env file
load_dotenv()
configure_logging(os.getenv("LOG_LEVEL", "INFO"))

from configurations.app import AppConfiguration  # noqa: E402
from dtos.configurations.app import AppConfigurationDTO  # noqa: E402

logger.debug("Loading Configurations")
app_configuration: AppConfigurationDTO = AppConfiguration().get_config()
logger.debug("Loaded Configurations")

if "LOG_LEVEL" not in os.environ:
    configure_logging(app_configuration.log_level)


def resolve_path(path: str) -> Path:
    """
    Resolve a configured path against the project root.
    """
    candidate = Path(path)
    if candidate.is_absolute():
        return candidate
    return PROJECT_ROOT / candidate
