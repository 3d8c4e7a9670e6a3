"""Configuration loading for the command line tool."""

import logging
import pprint
import sys
from typing import Any

from pydantic import ValidationError

from betti_bounds import sentry_config
from betti_bounds.config.main import BettiConfig
from betti_bounds.exceptions import ConfigurationError
from betti_bounds.utils import get_version

logger = logging.getLogger(__name__)

SENSITIVE_KEYS = {"dsn"}


def load_config() -> BettiConfig:
    """Load and validate configuration.

    - Loads configuration from env vars and .env (via pydantic-settings).
    - Sets up logging on stderr based on debug mode.
    - Initializes Sentry if configured.

    Raises:
        ConfigurationError: The environment or .env holds invalid settings.
    """
    try:
        config = BettiConfig()
    except ValidationError as e:
        raise ConfigurationError(_format_validation_error(e), original_error=e) from e
    except Exception as e:
        raise ConfigurationError(
            f"Failed to load configuration: {e}", original_error=e
        ) from e

    log_level = logging.DEBUG if config.debug else logging.WARNING
    logging.basicConfig(
        level=log_level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=[logging.StreamHandler(sys.stderr)],
    )

    if config.debug:
        logger.debug("Debug mode is enabled")

    if config.sentry and config.sentry.dsn:
        sentry_config.initialize_sentry(config.sentry, release=get_version())

    safe_config = mask_sensitive_data(config.model_dump(mode="json"))
    logger.debug("Merged configuration:\n%s", pprint.pformat(safe_config))

    return config


def mask_sensitive_data(data: Any) -> Any:
    """Recursively mask sensitive data in a dictionary."""
    if isinstance(data, dict):
        return {
            k: "********" if k in SENSITIVE_KEYS and v else mask_sensitive_data(v)
            for k, v in data.items()
        }
    if isinstance(data, list):
        return [mask_sensitive_data(item) for item in data]
    return data


def _format_validation_error(e: ValidationError) -> str:
    """Format a Pydantic ValidationError into a human-readable string.

    Args:
        e: The ValidationError to format.

    Returns:
        A formatted string summary of the errors.
    """
    error_messages = []
    for error in e.errors():
        loc = ".".join(str(i) for i in error["loc"])
        msg = error["msg"]
        error_messages.append(f"  - {loc}: {msg}")

    return "Configuration Error:\n" + "\n".join(error_messages)
