"""Exception handlers mapping failures to exit codes and stderr messages."""

import logging
from typing import TextIO

from betti_bounds.exceptions import BettiError, ConfigurationError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_VIOLATIONS = 2


def configuration_error_handler(exc: ConfigurationError, stderr: TextIO) -> int:
    """Raised before logging is set up, so the message goes to stderr only."""
    print(f"error: {exc}", file=stderr)
    return EXIT_INPUT_ERROR


def betti_error_handler(exc: BettiError, stderr: TextIO) -> int:
    """Invalid tables, documents, ranges and bound preconditions."""
    logger.debug("Command failed: %s", exc, exc_info=True)
    print(f"error: {type(exc).__name__}: {exc}", file=stderr)
    return EXIT_INPUT_ERROR


def os_error_handler(exc: OSError, stderr: TextIO) -> int:
    logger.debug("Cannot read input: %s", exc)
    print(f"error: cannot read {exc.filename}: {exc.strerror}", file=stderr)
    return EXIT_INPUT_ERROR


def general_exception_handler(exc: Exception, stderr: TextIO) -> int:
    logger.error("Unhandled exception: %s", exc, exc_info=True)
    print(f"error: {type(exc).__name__}: {exc}", file=stderr)
    return EXIT_INPUT_ERROR


def handle_exception(exc: Exception, stderr: TextIO) -> int:
    if isinstance(exc, ConfigurationError):
        return configuration_error_handler(exc, stderr)
    if isinstance(exc, BettiError):
        return betti_error_handler(exc, stderr)
    if isinstance(exc, OSError):
        return os_error_handler(exc, stderr)
    return general_exception_handler(exc, stderr)
